import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import GF3, brute_dependent, incidence_2x5, matrices, triangle_matrix
from roughmat.errors import (
    ClosureTooLarge,
    GroundMismatch,
    GroundTooLarge,
    NotAPartitionMatrix,
    TooManyTransversals,
)
from roughmat.fields import GF2, Q
from roughmat.linalg import ExactMatrix, Vector, identity
from roughmat.matroid import (
    SetFamily,
    VectorMatroid,
    bases,
    bases_via_ones,
    circuit_axiom_violations,
    circuits,
    circuits_via_nullspace,
    downward_closure,
    independence_axiom_violations,
    independent,
    independent_sets,
    matroids_equal,
    min_family,
    partition_bases,
    partition_circuits,
    partition_independent,
    support,
)
from roughmat.roughsets import Partition, Universe, encode_matrix

U5 = Universe.of_size(5)
N5 = Universe(("1", "2", "3", "4", "5"))
TRANSVERSAL_PAIRS = [["1", "2"], ["1", "4"], ["1", "5"], ["2", "3"], ["3", "4"], ["3", "5"]]


def fam(U, lists):
    return SetFamily(U, [U.subset(s) for s in lists])


def labels_of(F):
    return F.as_label_lists()


def test_support_examples():
    assert support(Vector.of(Q, [1, -1, 3, 0, 4]), U5).labels == ("x1", "x2", "x3", "x5")
    assert support(Vector.of(GF2, [1, 1, 0, 0, 1]), U5).labels == ("x1", "x2", "x5")
    assert support(Vector.of(GF2, [0] * 5), U5).labels == ()


def test_family_canonical_order():
    F = fam(N5, [["2", "3"], ["1"], ["4", "5"], ["1"], []])
    assert labels_of(F) == [[], ["1"], ["2", "3"], ["4", "5"]]


def test_min_examples():
    assert labels_of(min_family(fam(N5, [["2", "3"]]))) == [["2", "3"]]
    assert labels_of(min_family(fam(N5, [["2"], ["3"], ["2", "3"]]))) == [["2"], ["3"]]
    assert len(min_family(SetFamily(N5))) == 0


def test_downward_closure_examples():
    assert labels_of(downward_closure(fam(U5, [["x1", "x2"]]))) == [[], ["x1"], ["x2"], ["x1", "x2"]]
    assert len(downward_closure(SetFamily(U5))) == 0
    with pytest.raises(ClosureTooLarge):
        downward_closure(SetFamily(Universe.of_size(21), [(1 << 21) - 1]))


def test_incidence_independent_sets():
    M = VectorMatroid(incidence_2x5(Q))
    expected = [[]] + [[x] for x in "12345"] + TRANSVERSAL_PAIRS
    assert labels_of(independent_sets(M)) == expected
    assert len(independent_sets(M)) == 12
    assert labels_of(bases(M)) == TRANSVERSAL_PAIRS
    assert downward_closure(bases(M)) == independent_sets(M)


def test_independent_examples():
    M = VectorMatroid(incidence_2x5(Q))
    assert independent(M, N5.subset(["1", "5"]))
    assert independent(M, N5.subset(["1", "2"]))
    assert not independent(M, N5.subset(["2", "4"]))
    assert independent(M, N5.empty())


def test_triangle_circuit_split():
    c456 = Universe.of_size(6).subset(["x4", "x5", "x6"])
    assert c456 in circuits(VectorMatroid(triangle_matrix(GF2)))
    assert c456 not in circuits(VectorMatroid(triangle_matrix(Q)))
    assert not matroids_equal(VectorMatroid(triangle_matrix(Q)), VectorMatroid(triangle_matrix(GF2)))


def test_trivial_matroids():
    assert len(circuits(VectorMatroid(identity(Q, 4)))) == 0
    assert [len(b) for b in bases(VectorMatroid(identity(Q, 4)))] == [4]
    ones = ExactMatrix.from_rows(GF3, [[1, 1, 1, 1]])
    assert labels_of(bases(VectorMatroid(ones))) == [["x1"], ["x2"], ["x3"], ["x4"]]


def test_partition_matroid_examples(two_blocks):
    assert labels_of(partition_circuits(two_blocks)) == [["x1", "x3"], ["x2", "x4"], ["x2", "x5"], ["x4", "x5"]]
    assert len(partition_circuits(Partition.discrete(U5))) == 0
    U3 = Universe.of_size(3)
    assert len(partition_circuits(Partition.single_block(U3))) == 3

    relabel = {f"x{i}": str(i) for i in range(1, 6)}
    assert [[relabel[x] for x in b] for b in labels_of(partition_bases(two_blocks))] == TRANSVERSAL_PAIRS
    assert labels_of(partition_bases(Partition.discrete(U5))) == [list(U5.elements)]
    assert len(partition_bases(Partition.single_block(U5))) == 5

    assert partition_independent(two_blocks, U5.subset(["x1", "x4"]))
    assert not partition_independent(two_blocks, U5.subset(["x2", "x4"]))
    assert partition_independent(two_blocks, U5.empty())


def test_transversal_guard():
    U = Universe.of_size(42)
    P = Partition.from_rgs(U, [i % 21 for i in range(42)])
    with pytest.raises(TooManyTransversals):
        partition_bases(P)


def test_nullspace_examples(two_blocks):
    B = encode_matrix(two_blocks)
    assert labels_of(circuits_via_nullspace(B)) == [["x1", "x3"], ["x2", "x4"], ["x2", "x5"], ["x4", "x5"]]
    assert len(circuits_via_nullspace(identity(GF3, 4))) == 0
    A = triangle_matrix(GF2)
    assert circuits_via_nullspace(A) == circuits(VectorMatroid(A))


def test_bases_via_ones_examples(two_blocks):
    assert bases_via_ones(encode_matrix(two_blocks)) == partition_bases(two_blocks)
    assert labels_of(bases_via_ones(identity(GF2, 3))) == [["x1", "x2", "x3"]]
    row = ExactMatrix.from_rows(GF2, [[1, 1, 1, 1]])
    assert labels_of(bases_via_ones(row)) == [["x1"], ["x2"], ["x3"], ["x4"]]


def test_bases_via_ones_rejects_non_partition_matrices():
    with pytest.raises(NotAPartitionMatrix):
        bases_via_ones(triangle_matrix(GF2))
    with pytest.raises(NotAPartitionMatrix):
        bases_via_ones(encode_matrix(Partition.discrete(U5), Q))


def test_matroids_equal_examples(two_blocks):
    assert matroids_equal(VectorMatroid(encode_matrix(two_blocks, Q)), VectorMatroid(encode_matrix(two_blocks, GF2)))
    A = incidence_2x5(Q)
    with pytest.raises(GroundMismatch):
        matroids_equal(VectorMatroid(A), VectorMatroid(encode_matrix(two_blocks, Q)))


def test_ground_guard():
    A = ExactMatrix.from_rows(GF2, [[1] * 17])
    with pytest.raises(GroundTooLarge):
        circuits(VectorMatroid(A))


def brute_circuits(A):
    """Minimal dependent column sets by direct coefficient search."""
    found = []
    for k in range(1, A.n + 1):
        for combo in itertools.combinations(range(A.n), k):
            mask = sum(1 << j for j in combo)
            if any(c & mask == c for c in found):
                continue
            if brute_dependent(A, combo):
                found.append(mask)
    return set(found)


def test_circuits_against_coefficient_search():
    rng = random.Random("circuits-oracle")
    for _ in range(200):
        spec = rng.choice([GF2, GF3])
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        A = ExactMatrix.from_rows(spec, [[rng.randrange(spec.p) for _ in range(n)] for _ in range(m)])
        assert circuits(VectorMatroid(A)).masks == brute_circuits(A)
        assert circuits_via_nullspace(A).masks == brute_circuits(A)


@settings(max_examples=120, deadline=None)
@given(matrices(max_m=4, max_n=7))
def test_matroid_axioms_hold(A):
    M = VectorMatroid(A)
    C = circuits(M)
    assert circuit_axiom_violations(C) == []
    assert independence_axiom_violations(independent_sets(M)) == []
    r = len(next(iter(bases(M))))
    assert all(len(B) == r for B in bases(M))


@settings(max_examples=120, deadline=None)
@given(matrices(max_m=4, max_n=7))
def test_independent_iff_no_circuit_inside(A):
    M = VectorMatroid(A)
    C = circuits(M)
    I = independent_sets(M)
    for mask in range(1 << A.n):
        assert (mask in I.masks) == (not any(c & mask == c for c in C.masks))


def test_axiom_checkers_detect_violations():
    U = Universe.of_size(3)
    assert circuit_axiom_violations(SetFamily(U, [0]))
    assert circuit_axiom_violations(SetFamily(U, [0b01, 0b11]))
    # (C3) fails: {1,2},{2,3} without any circuit inside {1,3}
    assert circuit_axiom_violations(SetFamily(U, [0b011, 0b110]))
    assert independence_axiom_violations(SetFamily(U, [0b01]))
    assert independence_axiom_violations(SetFamily(U, [0, 0b01, 0b11, 0b10, 0b100]))
