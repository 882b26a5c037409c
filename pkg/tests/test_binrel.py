import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import matrices, triangle_matrix
from roughmat.binrel import (
    BdmVerdict,
    PairRelation,
    is_binary_dependence,
    is_binary_dependence_literal,
    is_equivalence,
    iso_f,
    partition_from_matrix_gf2,
    partition_from_relation,
    relation_from_matrix,
    roundtrip_matroid_equal,
    verify_homomorphism,
)
from roughmat.errors import NotBinaryDependence, UniverseMismatch, WrongField
from roughmat.fields import GF2, Q
from roughmat.linalg import ExactMatrix, column_rank, identity
from roughmat.matroid import VectorMatroid, circuits, partition_circuits
from roughmat.roughsets import Partition, Universe, encode_matrix, enumerate_partitions, meet
from roughmat.verify import random_bdm_gf2

U5 = Universe.of_size(5)
SIGNED = [[1, -1, 1], [1, -1, 1]]


def test_signed_relation_over_q():
    R = relation_from_matrix(ExactMatrix.from_rows(Q, SIGNED))
    assert ("x1", "x2") in R and ("x2", "x3") in R
    assert ("x1", "x3") not in R
    assert not is_equivalence(R)
    with pytest.raises(ValueError):
        partition_from_relation(R)


def test_signed_relation_over_gf2_is_total():
    # -1 reduces to 1 mod 2, so every column coincides
    R = relation_from_matrix(ExactMatrix.from_rows(GF2, SIGNED))
    assert len(R.pairs) == 9
    assert is_equivalence(R)


def test_relation_of_block_incidence(two_blocks):
    R = relation_from_matrix(encode_matrix(two_blocks))
    assert is_equivalence(R)
    assert partition_from_relation(R) == two_blocks
    assert partition_from_matrix_gf2(encode_matrix(two_blocks)) == two_blocks


def test_identity_relation_is_diagonal():
    R = relation_from_matrix(identity(GF2, 4))
    assert R.pairs == frozenset((i, i) for i in range(4))
    assert is_equivalence(R)
    assert partition_from_matrix_gf2(identity(GF2, 4)) == Partition.discrete(Universe.of_size(4))


def test_equal_columns_single_block():
    A = ExactMatrix.from_rows(GF2, [[1, 1, 1], [0, 0, 0]])
    assert partition_from_matrix_gf2(A) == Partition.single_block(Universe.of_size(3))
    with pytest.raises(WrongField):
        partition_from_matrix_gf2(ExactMatrix.from_rows(Q, [[1]]))


def test_is_equivalence_explicit_failures():
    U = Universe.of_size(3)
    diag = {(i, i) for i in range(3)}
    assert is_equivalence(PairRelation(U, frozenset(diag)))
    assert not is_equivalence(PairRelation(U, frozenset(diag - {(2, 2)})))
    assert not is_equivalence(PairRelation(U, frozenset(diag | {(0, 1)})))


def test_bdm_verdicts(two_blocks):
    assert is_binary_dependence(encode_matrix(two_blocks)) == BdmVerdict(True)

    v = is_binary_dependence(triangle_matrix(GF2))
    assert not v.is_member and len(v.witness) > 2
    A = triangle_matrix(GF2)
    idx = [A.label_index(x) for x in v.witness]
    assert column_rank(A, idx) < len(idx)
    assert all(column_rank(A, p) == 2 for p in itertools.combinations(idx, 2))
    # the dependent, pairwise independent triple of the worked example is one such offender
    offenders = [c.labels for c in circuits(VectorMatroid(A)) if len(c) > 2]
    assert ("x4", "x5", "x6") in offenders

    z = is_binary_dependence(ExactMatrix.from_rows(GF2, [[1, 0, 1], [1, 0, 1]]))
    assert z == BdmVerdict(False, ("x2",), "zero column")


def test_verdict_invariant():
    with pytest.raises(ValueError):
        BdmVerdict(False)
    with pytest.raises(ValueError):
        BdmVerdict(True, ("x1",))


def test_bdm_criterion_exhaustive_small():
    for n in range(1, 5):
        for bits in itertools.product([0, 1], repeat=2 * n):
            A = ExactMatrix.from_rows(GF2, [bits[:n], bits[n:]])
            assert is_binary_dependence(A).is_member == is_binary_dependence_literal(A)


@settings(max_examples=200, deadline=None)
@given(matrices(specs=(GF2,), max_m=4, max_n=6))
def test_bdm_criterion_random(A):
    assert is_binary_dependence(A).is_member == is_binary_dependence_literal(A)


def test_iso_f_examples(two_blocks):
    assert iso_f(two_blocks).as_label_lists() == [["x1", "x3"], ["x2", "x4"], ["x2", "x5"], ["x4", "x5"]]
    assert len(iso_f(Partition.discrete(U5))) == 0
    assert iso_f(Partition.single_block(Universe.of_size(2))).as_label_lists() == [["x1", "x2"]]


def test_iso_f_is_partition_circuits():
    for n in range(1, 6):
        for P in enumerate_partitions(Universe.of_size(n)):
            assert iso_f(P) == partition_circuits(P)


def test_homomorphism_example():
    U = Universe.of_size(4)
    P1 = Partition.from_labels(U, [["x1", "x2"], ["x3", "x4"]])
    P2 = Partition.from_labels(U, [["x1", "x2", "x3"], ["x4"]])
    common = iso_f(P1) & iso_f(P2)
    assert common.as_label_lists() == [["x1", "x2"]]
    assert iso_f(meet(P1, P2)) == common
    assert verify_homomorphism(P1, P2)
    assert verify_homomorphism(P1, P1)
    with pytest.raises(UniverseMismatch):
        verify_homomorphism(P1, Partition.discrete(U5))


def test_homomorphism_and_injectivity_n4():
    parts = list(enumerate_partitions(Universe.of_size(4)))
    assert len({iso_f(P) for P in parts}) == len(parts) == 15
    assert all(verify_homomorphism(a, b) for a, b in itertools.product(parts, repeat=2))


def test_roundtrip_examples(two_blocks):
    assert roundtrip_matroid_equal(encode_matrix(two_blocks))
    assert roundtrip_matroid_equal(identity(GF2, 4))
    with pytest.raises(NotBinaryDependence):
        roundtrip_matroid_equal(triangle_matrix(GF2))
    with pytest.raises(WrongField):
        roundtrip_matroid_equal(encode_matrix(two_blocks, Q))


def test_random_bdm_members():
    rng = random.Random("bdm-members")
    for _ in range(100):
        A = random_bdm_gf2(rng, rng.randint(1, 6), rng.randint(1, 8))
        assert is_binary_dependence_literal(A)
        assert roundtrip_matroid_equal(A)


def test_block_incidence_roundtrip_n6():
    for P in enumerate_partitions(Universe.of_size(6)):
        B = encode_matrix(P)
        assert partition_from_matrix_gf2(B) == P
        assert is_binary_dependence(B).is_member
