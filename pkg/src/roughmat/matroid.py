"""Vector matroids, the partition matroid of an equivalence relation, and set families.

Two independent routes to the circuits of a vector matroid live here:

* :func:`circuits` scans subsets by ascending size and tests each with a rank
  computation, skipping supersets of circuits already found.  Works over any
  field, including Q.
* :func:`circuits_via_nullspace` enumerates the null space over a finite field
  and keeps the inclusion-minimal nonempty supports.

The verifier checks that both agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    ClosureTooLarge,
    GroundMismatch,
    GroundTooLarge,
    InfiniteField,
    LengthMismatch,
    NotAPartitionMatrix,
    TooManyTransversals,
    UniverseMismatch,
)
from .fields import GF2
from .linalg import (
    ENUMERATION_CAP,
    ExactMatrix,
    Vector,
    column_rank,
    enumerate_solutions,
    null_space_basis,
    rank,
    solve_ones,
)
from .roughsets import ElementSet, Partition, Universe, mask_indices

MAX_GROUND = 16
MAX_CLOSURE = 2**20
MAX_TRANSVERSALS = 2**20


def _canon_key(mask: int):
    return (mask.bit_count(), mask_indices(mask))


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets, sorted by size then by index sequence."""

    universe: Universe
    sets: tuple[ElementSet, ...]

    def __init__(self, universe: Universe, sets: Iterable[ElementSet | int] = ()):
        masks = set()
        for s in sets:
            if isinstance(s, ElementSet):
                if s.universe != universe:
                    raise UniverseMismatch("family member over a different universe")
                masks.add(s.mask)
            else:
                masks.add(s)
        ordered = sorted(masks, key=_canon_key)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "sets", tuple(ElementSet(universe, m) for m in ordered))

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.sets)

    def __len__(self):
        return len(self.sets)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.sets)

    def __contains__(self, item) -> bool:
        if isinstance(item, ElementSet):
            return item.universe == self.universe and item.mask in self.masks
        return self.universe.subset(item).mask in self.masks

    def __and__(self, other: "SetFamily") -> "SetFamily":
        if other.universe != self.universe:
            raise UniverseMismatch("families over different universes")
        return SetFamily(self.universe, self.masks & other.masks)

    def __or__(self, other: "SetFamily") -> "SetFamily":
        if other.universe != self.universe:
            raise UniverseMismatch("families over different universes")
        return SetFamily(self.universe, self.masks | other.masks)

    def issubset(self, other: "SetFamily") -> bool:
        return self.masks <= other.masks

    def as_label_lists(self) -> list[list[str]]:
        return [list(s.labels) for s in self.sets]

    def __repr__(self):
        return "{" + ", ".join(repr(s) for s in self.sets) + "}"


@dataclass(frozen=True)
class VectorMatroid:
    matrix: ExactMatrix

    @property
    def ground(self) -> Universe:
        return Universe(self.matrix.col_labels)

    @property
    def spec(self):
        return self.matrix.spec


def _ground_guard(n: int):
    if n > MAX_GROUND:
        raise GroundTooLarge(f"ground set of {n} exceeds subset-scan guard {MAX_GROUND}")


def support(v: Vector, ground: Universe) -> ElementSet:
    if len(v.components) != len(ground):
        raise LengthMismatch(f"vector of length {len(v.components)} over a ground set of {len(ground)}")
    return ElementSet(ground, _support_mask(v.components))


def _support_mask(components) -> int:
    mask = 0
    for i, x in enumerate(components):
        if x:
            mask |= 1 << i
    return mask


def _min_masks(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def min_family(F: SetFamily) -> SetFamily:
    """Members of F with no proper subset in F."""
    return SetFamily(F.universe, _min_masks(F.masks))


def downward_closure(F: SetFamily, cap: int = MAX_CLOSURE) -> SetFamily:
    """All subsets of members of F."""
    bound = sum(1 << len(s) for s in F)
    if bound > cap:
        raise ClosureTooLarge(f"closure bound {bound} exceeds cap {cap}")
    out = set()
    for s in F:
        sub = s.mask
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & s.mask
    return SetFamily(F.universe, out)


def _as_mask(M: VectorMatroid, S) -> int:
    if isinstance(S, ElementSet):
        if S.universe != M.ground:
            raise GroundMismatch("set is not over the matroid's ground set")
        return S.mask
    return M.ground.subset(S).mask


def independent(M: VectorMatroid, S) -> bool:
    mask = _as_mask(M, S)
    idx = mask_indices(mask)
    return column_rank(M.matrix, idx) == len(idx)


def independent_sets(M: VectorMatroid) -> SetFamily:
    A = M.matrix
    _ground_guard(A.n)
    return SetFamily(
        M.ground,
        (mask for mask in range(1 << A.n) if column_rank(A, mask_indices(mask)) == mask.bit_count()),
    )


def circuits(M: VectorMatroid) -> SetFamily:
    """Minimal dependent sets, by ascending-size scan with superset pruning."""
    A = M.matrix
    _ground_guard(A.n)
    found: list[int] = []
    for k in range(1, A.n + 1):
        for combo in itertools.combinations(range(A.n), k):
            mask = sum(1 << i for i in combo)
            if any(c & ~mask == 0 for c in found):
                continue
            if column_rank(A, combo) < k:
                found.append(mask)
    return SetFamily(M.ground, found)


def bases(M: VectorMatroid) -> SetFamily:
    A = M.matrix
    _ground_guard(A.n)
    r = rank(A)
    return SetFamily(
        M.ground,
        (sum(1 << i for i in combo) for combo in itertools.combinations(range(A.n), r) if column_rank(A, combo) == r),
    )


def matroids_equal(M1: VectorMatroid, M2: VectorMatroid) -> bool:
    """Same labelled ground set and the same independent sets."""
    if M1.ground != M2.ground:
        raise GroundMismatch("matroids on different labelled ground sets")
    n = len(M1.ground)
    _ground_guard(n)
    A1, A2 = M1.matrix, M2.matrix
    for mask in range(1 << n):
        idx = mask_indices(mask)
        if (column_rank(A1, idx) == len(idx)) != (column_rank(A2, idx) == len(idx)):
            return False
    return True


# -- the matroid M(R) of a partition --------------------------------------------


def partition_circuits(P: Partition) -> SetFamily:
    """Two-element subsets lying inside some block."""
    out = []
    for b in P.blocks:
        for i, j in itertools.combinations(b.indices, 2):
            out.append(1 << i | 1 << j)
    return SetFamily(P.universe, out)


def partition_bases(P: Partition) -> SetFamily:
    """Transversals: one element from every block."""
    count = 1
    for b in P.blocks:
        count *= len(b)
    if count > MAX_TRANSVERSALS:
        raise TooManyTransversals(f"{count} transversals exceeds cap {MAX_TRANSVERSALS}")
    choices = [[1 << i for i in b.indices] for b in P.blocks]
    return SetFamily(P.universe, (sum(c) for c in itertools.product(*choices)))


def partition_independent(P: Partition, S: ElementSet) -> bool:
    if S.universe != P.universe:
        raise UniverseMismatch("set and partition live on different universes")
    return all((b.mask & S.mask).bit_count() <= 1 for b in P.blocks)


# -- solution-space characterizations -------------------------------------------


def circuits_via_nullspace(A: ExactMatrix, cap: int = ENUMERATION_CAP) -> SetFamily:
    """Minimal nonempty supports of null-space vectors."""
    if not A.spec.is_finite:
        raise InfiniteField(f"null space over {A.spec} cannot be enumerated")
    supports = (_support_mask(v.components) for v in enumerate_solutions(null_space_basis(A), cap=cap))
    return SetFamily(Universe(A.col_labels), _min_masks(s for s in supports if s))


def is_partition_matrix(A: ExactMatrix) -> bool:
    """True for a GF(2) matrix with exactly one 1 per column and no zero row."""
    if A.spec != GF2:
        return False
    if any(sum(A.column(j)) != 1 for j in range(A.n)):
        return False
    return all(any(r) for r in A.data)


def bases_via_ones(A: ExactMatrix, cap: int = ENUMERATION_CAP) -> SetFamily:
    """Minimal supports of the GF(2) solutions of A·x = 1, for a block-incidence matrix A."""
    if not is_partition_matrix(A):
        raise NotAPartitionMatrix("expected a GF(2) block-incidence matrix (one 1 per column, no zero row)")
    sols = enumerate_solutions(solve_ones(A), cap=cap)
    return SetFamily(Universe(A.col_labels), _min_masks(_support_mask(v.components) for v in sols))


# -- axiom checkers -------------------------------------------------------------


def circuit_axiom_violations(F: SetFamily) -> list[str]:
    """(C1) no empty circuit, (C2) no nesting, (C3) circuit elimination."""
    bad = []
    masks = sorted(F.masks)
    if 0 in F.masks:
        bad.append("C1: empty set is a circuit")
    for a, b in itertools.permutations(masks, 2):
        if a & ~b == 0:
            bad.append(f"C2: {ElementSet(F.universe, a)!r} inside {ElementSet(F.universe, b)!r}")
    for a, b in itertools.combinations(masks, 2):
        union = a | b
        for i in mask_indices(a & b):
            target = union & ~(1 << i)
            if not any(c & ~target == 0 for c in masks):
                bad.append(
                    f"C3: no circuit inside {ElementSet(F.universe, a)!r}|{ElementSet(F.universe, b)!r} "
                    f"minus {F.universe.elements[i]}"
                )
    return bad


def independence_axiom_violations(F: SetFamily) -> list[str]:
    """(I1) empty set independent, (I2) hereditary, (I3) augmentation.

    (I3) is checked on pairs with |I2| = |I1| + 1, which is equivalent once
    (I2) holds.
    """
    bad = []
    fam = F.masks
    if 0 not in fam:
        bad.append("I1: empty set not independent")
    by_size: dict[int, list[int]] = {}
    for m in fam:
        by_size.setdefault(m.bit_count(), []).append(m)
        for i in mask_indices(m):
            if m & ~(1 << i) not in fam:
                bad.append(f"I2: {ElementSet(F.universe, m)!r} has a dependent subset")
                break
    for k, small in by_size.items():
        for i1 in small:
            for i2 in by_size.get(k + 1, ()):
                if not any((i1 | 1 << e) in fam for e in mask_indices(i2 & ~i1)):
                    bad.append(f"I3: cannot augment {ElementSet(F.universe, i1)!r} from {ElementSet(F.universe, i2)!r}")
    return bad
