"""Relations read off a matrix null space, binary dependence matrices, and the
map from partitions to minimal kernel-support families.

Binary dependence check
-----------------------
A matrix is a binary dependence matrix when it has no zero column and every
dependent column subset contains a dependent pair.  With no zero columns this
is the same as "every circuit has exactly two elements":

* if some circuit C has |C| >= 3, then C is dependent but every proper subset
  of C (in particular every pair) is independent, so C violates the condition;
* if every circuit has size 2, any dependent set contains a circuit, which is
  a dependent pair.

(Size-1 circuits are exactly zero columns.)  :func:`is_binary_dependence` uses
the circuit form; :func:`is_binary_dependence_literal` checks the subset
condition verbatim and is kept as a test oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import GroundTooLarge, NotBinaryDependence, UniverseMismatch, WrongField
from .fields import GF2
from .linalg import ENUMERATION_CAP, ExactMatrix, column_rank
from .matroid import MAX_GROUND, SetFamily, VectorMatroid, circuits, circuits_via_nullspace, matroids_equal
from .roughsets import ElementSet, Partition, Universe, encode_matrix, meet


@dataclass(frozen=True)
class PairRelation:
    universe: Universe
    pairs: frozenset[tuple[int, int]]  # index pairs into universe.elements

    def __contains__(self, pair) -> bool:
        a, b = pair
        return (self.universe.index(a), self.universe.index(b)) in self.pairs

    def label_pairs(self) -> list[tuple[str, str]]:
        el = self.universe.elements
        return [(el[i], el[j]) for i, j in sorted(self.pairs)]


@dataclass(frozen=True)
class BdmVerdict:
    is_member: bool
    witness: tuple[str, ...] | None = None
    reason: str = ""

    def __post_init__(self):
        if self.is_member != (self.witness is None):
            raise ValueError("witness must be present exactly for non-members")


def relation_from_matrix(A: ExactMatrix) -> PairRelation:
    """(x_i, x_j) related iff i == j or A·(e_i + e_j) = 0, i.e. column_i + column_j = 0."""
    spec = A.spec
    cols = [A.column(j) for j in range(A.n)]
    pairs = set()
    for i in range(A.n):
        for j in range(A.n):
            if i == j or not any(spec.add(a, b) for a, b in zip(cols[i], cols[j])):
                pairs.add((i, j))
    return PairRelation(Universe(A.col_labels), frozenset(pairs))


def is_equivalence(rel: PairRelation) -> bool:
    n = len(rel.universe)
    R = rel.pairs
    if any((i, i) not in R for i in range(n)):
        return False
    if any((j, i) not in R for i, j in R):
        return False
    succ: dict[int, set[int]] = {}
    for i, j in R:
        succ.setdefault(i, set()).add(j)
    return all(k in succ[i] for i, j in R for k in succ.get(j, ()))


def partition_from_relation(rel: PairRelation) -> Partition:
    if not is_equivalence(rel):
        raise ValueError("relation is not an equivalence")
    U = rel.universe
    masks = {}
    for i, j in rel.pairs:
        masks[i] = masks.get(i, 0) | 1 << j
    return Partition(U, tuple(ElementSet(U, m) for m in set(masks.values())))


def partition_from_matrix_gf2(A: ExactMatrix) -> Partition:
    """Group equal columns of a GF(2) matrix."""
    if A.spec != GF2:
        raise WrongField(f"expected a GF(2) matrix, got {A.spec}")
    U = Universe(A.col_labels)
    classes: dict[tuple, int] = {}
    for j in range(A.n):
        col = A.column(j)
        classes[col] = classes.get(col, 0) | 1 << j
    return Partition(U, tuple(ElementSet(U, m) for m in classes.values()))


def is_binary_dependence(A: ExactMatrix) -> BdmVerdict:
    if A.n > MAX_GROUND:
        raise GroundTooLarge(f"{A.n} columns exceeds guard {MAX_GROUND}")
    for j in range(A.n):
        if not any(A.column(j)):
            return BdmVerdict(False, (A.col_labels[j],), "zero column")
    for c in circuits(VectorMatroid(A)):
        if len(c) > 2:
            return BdmVerdict(False, c.labels, "dependent set with no dependent pair")
    return BdmVerdict(True)


def is_binary_dependence_literal(A: ExactMatrix) -> bool:
    """Subset-by-subset check of the defining conditions."""
    if any(not any(A.column(j)) for j in range(A.n)):
        return False
    for k in range(2, A.n + 1):
        for combo in itertools.combinations(range(A.n), k):
            if column_rank(A, combo) < k:
                if not any(column_rank(A, pair) < 2 for pair in itertools.combinations(combo, 2)):
                    return False
    return True


def iso_f(P: Partition, cap: int = ENUMERATION_CAP) -> SetFamily:
    """Minimal nonempty kernel supports of the GF(2) block-incidence matrix of P."""
    return circuits_via_nullspace(encode_matrix(P, GF2), cap=cap)


@lru_cache(maxsize=4096)
def _iso_f_cached(P: Partition) -> SetFamily:
    return iso_f(P)


def verify_homomorphism(P1: Partition, P2: Partition) -> bool:
    """f(P1 ∧ P2) == f(P1) ∩ f(P2)."""
    if P1.universe != P2.universe:
        raise UniverseMismatch("partitions over different universes")
    return _iso_f_cached(meet(P1, P2)) == (_iso_f_cached(P1) & _iso_f_cached(P2))


def roundtrip_matroid_equal(A: ExactMatrix) -> bool:
    """Matrix -> partition of equal columns -> block-incidence matrix; compare GF(2) matroids."""
    if A.spec != GF2:
        raise WrongField(f"expected a GF(2) matrix, got {A.spec}")
    verdict = is_binary_dependence(A)
    if not verdict.is_member:
        raise NotBinaryDependence(f"{verdict.reason}: {' '.join(verdict.witness)}")
    P = partition_from_matrix_gf2(A)
    return matroids_equal(VectorMatroid(encode_matrix(P, GF2)), VectorMatroid(A))
