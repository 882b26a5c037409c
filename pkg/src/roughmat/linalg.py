"""Exact dense linear algebra over a :class:`~roughmat.fields.FieldSpec`.

Matrices are small (the verifier never goes past a few dozen columns), so
everything is plain Python lists of raw field values.  Elimination always picks
the first nonzero entry as pivot, which makes every output deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    EnumerationTooLarge,
    InfiniteField,
    LengthMismatch,
    MixedFields,
    NonIntegerEntry,
    NotSquare,
    UnknownLabel,
)
from .fields import GF2, FieldElement, FieldSpec, Raw

ENUMERATION_CAP = 2**24


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def _coerce(spec: FieldSpec, x) -> Raw:
    if isinstance(x, FieldElement):
        if x.spec != spec:
            raise MixedFields(f"entry over {x.spec} in a matrix over {spec}")
        return x.value
    if isinstance(x, str):
        return spec(x).value
    return spec.reduce(x)


@dataclass(frozen=True)
class ExactMatrix:
    spec: FieldSpec
    data: tuple[tuple[Raw, ...], ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        if not self.data or not self.data[0]:
            raise ValueError("matrix needs at least one row and one column")
        n = len(self.data[0])
        if any(len(r) != n for r in self.data):
            raise LengthMismatch("ragged rows")
        if len(self.col_labels) != n:
            raise LengthMismatch(f"{len(self.col_labels)} labels for {n} columns")
        if len(set(self.col_labels)) != n:
            raise ValueError("column labels must be distinct")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Iterable[Iterable], labels: Sequence[str] | None = None):
        data = tuple(tuple(_coerce(spec, x) for x in row) for row in rows)
        if labels is None:
            labels = default_labels(len(data[0]) if data else 0)
        return cls(spec, data, tuple(labels))

    @property
    def m(self) -> int:
        return len(self.data)

    @property
    def n(self) -> int:
        return len(self.data[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.spec, self.data[i][j])

    def column(self, j: int) -> tuple[Raw, ...]:
        return tuple(r[j] for r in self.data)

    def label_index(self, label: str) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.spec, tuple(zip(*self.data)), default_labels(self.m))

    def select_columns(self, idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            self.spec,
            tuple(tuple(r[j] for j in idx) for r in self.data),
            tuple(self.col_labels[j] for j in idx),
        )

    def apply(self, v: "Vector") -> "Vector":
        """Matrix-vector product A·v."""
        if v.spec != self.spec:
            raise MixedFields(f"{v.spec} vector against {self.spec} matrix")
        if len(v.components) != self.n:
            raise LengthMismatch(f"vector of length {len(v.components)} for {self.n} columns")
        return Vector(self.spec, _matvec(self.spec, self.data, v.components))

    @cached_property
    def gf2_masks(self) -> tuple[int, ...]:
        """Columns packed as int bitmasks (bit i = row i); only meaningful over GF(2)."""
        return tuple(sum(1 << i for i in range(self.m) if self.data[i][j]) for j in range(self.n))

    def with_labels(self, labels: Sequence[str]) -> "ExactMatrix":
        return ExactMatrix(self.spec, self.data, tuple(labels))


@dataclass(frozen=True)
class Vector:
    spec: FieldSpec
    components: tuple[Raw, ...]

    @classmethod
    def of(cls, spec: FieldSpec, values: Iterable) -> "Vector":
        return cls(spec, tuple(_coerce(spec, x) for x in values))

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i) -> FieldElement:
        return FieldElement(self.spec, self.components[i])

    def is_zero(self) -> bool:
        return not any(self.components)


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of A·x = b: ``particular`` + span(``basis``), or empty."""

    kind: str  # "empty" | "affine"
    spec: FieldSpec
    n: int
    particular: Vector | None
    basis: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _matvec(spec: FieldSpec, rows, v) -> tuple[Raw, ...]:
    out = []
    for r in rows:
        acc = spec.zero
        for a, b in zip(r, v):
            if a and b:
                acc = spec.add(acc, spec.mul(a, b))
        out.append(acc)
    return tuple(out)


def _rref_rows(spec: FieldSpec, rows: list[list[Raw]], ncols: int | None = None):
    """In-place RREF of ``rows`` over the first ``ncols`` columns. Returns pivot columns."""
    m = len(rows)
    n = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot_row = rows[r]
        lead = pivot_row[c]
        if lead != 1:
            f = spec.inv(lead)
            pivot_row[:] = [spec.mul(f, x) for x in pivot_row]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [spec.sub(x, spec.mul(f, y)) for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def _gf2_rank(cols: Iterable[int]) -> int:
    """Rank of GF(2) columns packed as int bitmasks (xor basis)."""
    basis: list[int] = []
    for v in cols:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def rref(A: ExactMatrix) -> tuple[ExactMatrix, list[int], int]:
    """Reduced row echelon form. Pivot columns are 0-based indices."""
    rows = [list(r) for r in A.data]
    piv = _rref_rows(A.spec, rows)
    return ExactMatrix(A.spec, tuple(tuple(r) for r in rows), A.col_labels), piv, len(piv)


def rank(A: ExactMatrix) -> int:
    return column_rank(A, range(A.n))


def column_rank(A: ExactMatrix, idx: Iterable[int]) -> int:
    """Rank of the column submatrix on indices ``idx``."""
    idx = list(idx)
    if not idx:
        return 0
    if A.spec == GF2:
        masks = A.gf2_masks
        return _gf2_rank(masks[j] for j in idx)
    rows = [[r[j] for j in idx] for r in A.data]
    return len(_rref_rows(A.spec, rows))


def determinant(A: ExactMatrix) -> FieldElement:
    if A.m != A.n:
        raise NotSquare(f"{A.m}x{A.n} matrix has no determinant")
    spec = A.spec
    rows = [list(r) for r in A.data]
    n = A.n
    det = spec.one
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return FieldElement(spec, spec.zero)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = spec.neg(det)
        lead = rows[c][c]
        det = spec.mul(det, lead)
        f_inv = spec.inv(lead)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = spec.mul(rows[i][c], f_inv)
                rows[i] = [spec.sub(x, spec.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return FieldElement(spec, det)


def _solve(A: ExactMatrix, rhs: Sequence[Raw]) -> SolutionSet:
    spec, n = A.spec, A.n
    aug = [list(r) + [b] for r, b in zip(A.data, rhs)]
    piv = _rref_rows(spec, aug, ncols=n)
    # inconsistent iff some zero row of the coefficient part has nonzero rhs
    for row in aug[len(piv):]:
        if row[n]:
            return SolutionSet("empty", spec, n, None, ())
    part = [spec.zero] * n
    for r, c in enumerate(piv):
        part[c] = aug[r][n]
    pivset = set(piv)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [spec.zero] * n
        v[f] = spec.one
        for r, c in enumerate(piv):
            v[c] = spec.neg(aug[r][f])
        basis.append(Vector(spec, tuple(v)))
    return SolutionSet("affine", spec, n, Vector(spec, tuple(part)), tuple(basis))


def null_space_basis(A: ExactMatrix) -> SolutionSet:
    return _solve(A, [A.spec.zero] * A.m)


def solve_ones(A: ExactMatrix) -> SolutionSet:
    """Solution set of A·x = 1 (the all-ones right-hand side)."""
    return _solve(A, [A.spec.one] * A.m)


def enumerate_solutions(
    S: SolutionSet, spec: FieldSpec | None = None, cap: int = ENUMERATION_CAP
) -> Iterator[Vector]:
    """Yield every vector of a solution set over a finite field.

    Order is lexicographic in the coefficient tuple over ``S.basis``.
    """
    spec = S.spec if spec is None else spec
    if spec != S.spec:
        raise MixedFields(f"solution set over {S.spec} enumerated as {spec}")
    if not spec.is_finite:
        raise InfiniteField(f"cannot enumerate solutions over {spec}")
    if S.kind == "empty":
        return
    total = spec.p ** len(S.basis)
    if total > cap:
        raise EnumerationTooLarge(f"{total} solutions exceeds cap {cap}")
    p = spec.p
    base = S.particular.components
    for coeffs in itertools.product(range(p), repeat=len(S.basis)):
        v = list(base)
        for c, b in zip(coeffs, S.basis):
            if c:
                for i, x in enumerate(b.components):
                    if x:
                        v[i] = (v[i] + c * x) % p
        yield Vector(spec, tuple(v))


def columns_independent(A: ExactMatrix, S: Iterable[str]) -> bool:
    idx = [A.label_index(s) for s in S]
    if len(set(idx)) != len(idx):
        raise ValueError("duplicate labels in column subset")
    return column_rank(A, idx) == len(idx)


def reinterpret(A: ExactMatrix, target: FieldSpec) -> ExactMatrix:
    """Read an integer matrix over another field (entries reduced mod p)."""
    if A.spec.is_finite:
        ints = A.data  # residues are already integers
    else:
        ints = []
        for row in A.data:
            for x in row:
                if Fraction(x).denominator != 1:
                    raise NonIntegerEntry(f"entry {x} is not an integer")
            ints.append(tuple(int(x) for x in row))
    return ExactMatrix(target, tuple(tuple(target.reduce(x) for x in r) for r in ints), A.col_labels)


def identity(spec: FieldSpec, n: int, labels: Sequence[str] | None = None) -> ExactMatrix:
    return ExactMatrix.from_rows(spec, [[int(i == j) for j in range(n)] for i in range(n)], labels)
