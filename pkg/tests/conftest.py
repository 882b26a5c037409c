import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from roughmat.fields import GF2, Q, FieldSpec
from roughmat.linalg import ExactMatrix
from roughmat.roughsets import Partition, Universe

GF3 = FieldSpec("prime", 3)
GF5 = FieldSpec("prime", 5)


@pytest.fixture
def two_blocks():
    U = Universe.of_size(5)
    return Partition.from_labels(U, [["x1", "x3"], ["x2", "x4", "x5"]])


def triangle_matrix(spec=Q):
    return ExactMatrix.from_rows(
        spec,
        [[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]],
    )


def incidence_2x5(spec=Q):
    return ExactMatrix.from_rows(spec, [[1, 0, 1, 0, 0], [0, 1, 0, 1, 1]], ["1", "2", "3", "4", "5"])


@st.composite
def matrices(draw, specs=(GF2, GF3, Q), max_m=6, max_n=8):
    spec = draw(st.sampled_from(specs))
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    if spec.is_finite:
        entry = st.integers(0, spec.p - 1)
    else:
        entry = st.integers(-3, 3).map(Fraction)
    rows = draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=m, max_size=m))
    return ExactMatrix.from_rows(spec, rows)


def brute_dependent(A, idx):
    """Finite-field oracle: some nonzero coefficient vector kills the columns."""
    p = A.spec.p
    for coeffs in itertools.product(range(p), repeat=len(idx)):
        if not any(coeffs):
            continue
        if all(sum(c * A.data[i][j] for c, j in zip(coeffs, idx)) % p == 0 for i in range(A.m)):
            return True
    return False


def leibniz_det(rows):
    """Permutation-expansion determinant over Q (independent of elimination)."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


def minor_rank(A):
    """Rank over Q as the largest nonvanishing minor."""
    for k in range(min(A.m, A.n), 0, -1):
        for ri in itertools.combinations(range(A.m), k):
            for ci in itertools.combinations(range(A.n), k):
                if leibniz_det([[A.data[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0
