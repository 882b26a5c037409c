"""Partitions of a finite universe and the Pawlak approximation operators.

Subsets of the universe are stored as int bitmasks (bit i = i-th element of the
universe), which keeps subset tests and the exhaustive sweeps cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidPartition, UniverseMismatch, UniverseTooLarge, UnknownLabel
from .fields import GF2, FieldSpec
from .linalg import ExactMatrix, default_labels

MAX_PARTITION_N = 12
MAX_SUBSET_SCAN_N = 20


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("universe must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate universe elements")

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        return cls(default_labels(n))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def subset(self, labels: Iterable[str]) -> "ElementSet":
        mask = 0
        for s in labels:
            mask |= 1 << self.index(s)
        return ElementSet(self, mask)

    def full(self) -> "ElementSet":
        return ElementSet(self, self.full_mask)

    def empty(self) -> "ElementSet":
        return ElementSet(self, 0)


def mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class ElementSet:
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.universe.full_mask:
            raise ValueError("set is not contained in the universe")

    @property
    def indices(self) -> tuple[int, ...]:
        return mask_indices(self.mask)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.elements[i] for i in self.indices)

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.universe.index(label) & 1)

    def _same(self, other: "ElementSet"):
        if other.universe != self.universe:
            raise UniverseMismatch("sets over different universes")

    def __or__(self, other):
        self._same(other)
        return ElementSet(self.universe, self.mask | other.mask)

    def __and__(self, other):
        self._same(other)
        return ElementSet(self.universe, self.mask & other.mask)

    def __sub__(self, other):
        self._same(other)
        return ElementSet(self.universe, self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        return ElementSet(self.universe, self.universe.full_mask & ~self.mask)

    def issubset(self, other: "ElementSet") -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def sort_key(self) -> tuple:
        return (len(self), self.indices)

    def __repr__(self):
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class Partition:
    """U/R: disjoint nonempty blocks covering the universe, ordered by smallest element."""

    universe: Universe
    blocks: tuple[ElementSet, ...]

    def __post_init__(self):
        seen = 0
        for b in self.blocks:
            if b.universe != self.universe:
                raise UniverseMismatch("block over a different universe")
            if not b.mask:
                raise InvalidPartition("empty block")
            if b.mask & seen:
                raise InvalidPartition(f"block {b!r} overlaps an earlier block")
            seen |= b.mask
        if seen != self.universe.full_mask:
            missing = ElementSet(self.universe, self.universe.full_mask & ~seen)
            raise InvalidPartition(f"blocks do not cover {missing!r}")
        ordered = tuple(sorted(self.blocks, key=lambda b: (b.mask & -b.mask)))
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def from_labels(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> "Partition":
        return cls(universe, tuple(universe.subset(b) for b in blocks))

    @classmethod
    def from_rgs(cls, universe: Universe, rgs: Sequence[int]) -> "Partition":
        masks: dict[int, int] = {}
        for i, b in enumerate(rgs):
            masks[b] = masks.get(b, 0) | 1 << i
        return cls(universe, tuple(ElementSet(universe, m) for m in masks.values()))

    @classmethod
    def discrete(cls, universe: Universe) -> "Partition":
        return cls(universe, tuple(ElementSet(universe, 1 << i) for i in range(len(universe))))

    @classmethod
    def single_block(cls, universe: Universe) -> "Partition":
        return cls(universe, (universe.full(),))

    def __len__(self):
        return len(self.blocks)

    def block_index(self) -> tuple[int, ...]:
        """Block number of each universe element."""
        out = [0] * len(self.universe)
        for k, b in enumerate(self.blocks):
            for i in b.indices:
                out[i] = k
        return tuple(out)

    def __repr__(self):
        return "|".join(repr(b) for b in self.blocks)


def _check(P: Partition, X: ElementSet):
    if X.universe != P.universe:
        raise UniverseMismatch("set and partition live on different universes")


def lower_approx(P: Partition, X: ElementSet) -> ElementSet:
    _check(P, X)
    mask = 0
    for b in P.blocks:
        if b.mask & ~X.mask == 0:
            mask |= b.mask
    return ElementSet(P.universe, mask)


def upper_approx(P: Partition, X: ElementSet) -> ElementSet:
    _check(P, X)
    mask = 0
    for b in P.blocks:
        if b.mask & X.mask:
            mask |= b.mask
    return ElementSet(P.universe, mask)


def encode_matrix(P: Partition, spec: FieldSpec = GF2, row_order: Sequence[int] | None = None) -> ExactMatrix:
    """Block-incidence matrix: one row per block, entry 1 iff the element lies in it.

    Columns follow universe order. Rows follow the canonical block order
    unless ``row_order`` (a permutation of block positions) says otherwise.
    """
    blocks = P.blocks
    if row_order is not None:
        if sorted(row_order) != list(range(len(blocks))):
            raise InvalidPartition(f"row_order {list(row_order)} is not a permutation of {len(blocks)} blocks")
        blocks = tuple(blocks[k] for k in row_order)
    rows = [[(b.mask >> j) & 1 for j in range(len(P.universe))] for b in blocks]
    return ExactMatrix.from_rows(spec, rows, P.universe.elements)


def meet(P1: Partition, P2: Partition) -> Partition:
    """Partition of the intersection of two equivalence relations."""
    if P1.universe != P2.universe:
        raise UniverseMismatch("partitions over different universes")
    blocks = [a.mask & b.mask for a in P1.blocks for b in P2.blocks]
    return Partition(P1.universe, tuple(ElementSet(P1.universe, m) for m in blocks if m))


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All RGS a_0..a_{n-1} (a_0 = 0, a_i <= 1 + max(a_0..a_{i-1})) in lexicographic order."""
    a = [0] * n
    mx = [0] * n

    def rec(i):
        if i == n:
            yield tuple(a)
            return
        for v in range(mx[i - 1] + 2):
            a[i] = v
            mx[i] = max(mx[i - 1], v)
            yield from rec(i + 1)

    if n == 0:
        return
    yield from rec(1)


def enumerate_partitions(U: Universe) -> Iterator[Partition]:
    if len(U) > MAX_PARTITION_N:
        raise UniverseTooLarge(f"{len(U)} elements exceeds partition enumeration guard {MAX_PARTITION_N}")
    for rgs in restricted_growth_strings(len(U)):
        yield Partition.from_rgs(U, rgs)


def all_subsets(U: Universe) -> Iterator[ElementSet]:
    for mask in range(1 << len(U)):
        yield ElementSet(U, mask)


def upper_full_sets(P: Partition):
    """Every X whose upper approximation is the whole universe (X meets every block)."""
    from .matroid import SetFamily

    U = P.universe
    if len(U) > MAX_SUBSET_SCAN_N:
        raise UniverseTooLarge(f"{len(U)} elements exceeds subset scan guard {MAX_SUBSET_SCAN_N}")
    # product over blocks of a nonempty sub-choice
    per_block = [[m for m in _submasks(b.mask) if m] for b in P.blocks]
    return SetFamily(U, (ElementSet(U, sum(c)) for c in itertools.product(*per_block)))


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
