"""Exact arithmetic over GF(2), GF(p) and the rationals.

A :class:`FieldSpec` knows how to operate on *raw* values (``int`` residues for
prime fields, :class:`fractions.Fraction` for the rationals).  The linear
algebra code works on raw values for speed; :class:`FieldElement` wraps a raw
value together with its spec for the public, operator-friendly API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DivisionByZero, MixedFields, NonPrimeModulus, ParseError

BINARY = "binary"
PRIME = "prime"
RATIONAL = "rational"

MAX_MODULUS = 2**31 - 1

Raw = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3,215,031,751."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == BINARY:
            if self.p not in (None, 2):
                raise NonPrimeModulus(f"binary field has modulus 2, got {self.p}")
            object.__setattr__(self, "p", 2)
        elif self.kind == PRIME:
            if self.p is None or not is_prime(self.p) or self.p > MAX_MODULUS:
                raise NonPrimeModulus(f"modulus must be a prime <= {MAX_MODULUS}, got {self.p}")
            if self.p == 2:
                object.__setattr__(self, "kind", BINARY)
        elif self.kind == RATIONAL:
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind != RATIONAL

    @property
    def size(self) -> int | None:
        return self.p if self.is_finite else None

    @property
    def tag(self) -> str:
        if self.kind == RATIONAL:
            return "q"
        return f"gf{self.p}"

    def __str__(self):
        return {BINARY: "GF(2)", RATIONAL: "Q"}.get(self.kind, f"GF({self.p})")

    # -- raw-value arithmetic -------------------------------------------------

    def reduce(self, x) -> Raw:
        """Canonicalize an int/Fraction (or integer-valued literal) into this field."""
        if self.kind == RATIONAL:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return x.numerator * self.inv(x.denominator % self.p) % self.p
            x = x.numerator
        return int(x) % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.kind == RATIONAL:
            return a + b
        return (a + b) % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.kind == RATIONAL:
            return a - b
        return (a - b) % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.kind == RATIONAL:
            return a * b
        return a * b % self.p

    def neg(self, a: Raw) -> Raw:
        if self.kind == RATIONAL:
            return -a
        return -a % self.p

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.kind == RATIONAL:
            return 1 / Fraction(a)
        return pow(int(a), -1, self.p)

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.kind == RATIONAL else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.kind == RATIONAL else 1

    def raw_elements(self) -> range:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return range(self.p)

    # -- element-level API ----------------------------------------------------

    def __call__(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.spec != self:
                raise MixedFields(f"element of {x.spec} used as {self}")
            return x
        if isinstance(x, str):
            return FieldElement(self, parse_raw(self, x))
        return FieldElement(self, self.reduce(x))

    def elements(self) -> Iterator["FieldElement"]:
        for v in self.raw_elements():
            yield FieldElement(self, v)


GF2 = FieldSpec(BINARY)
Q = FieldSpec(RATIONAL)


def field_make(kind: str, p: int | None = None) -> FieldSpec:
    return FieldSpec(kind, p)


def parse_field_tag(tag: str) -> FieldSpec:
    """``gf2`` / ``gf<p>`` / ``q`` -> FieldSpec."""
    t = tag.strip().lower()
    if t == "q":
        return Q
    if t.startswith("gf") and t[2:].isdigit():
        p = int(t[2:])
        return GF2 if p == 2 else FieldSpec(PRIME, p)
    raise ParseError(f"unknown field tag {tag!r} (expected gf2, gf<p> or q)")


def parse_raw(spec: FieldSpec, text: str) -> Raw:
    s = text.strip()
    try:
        if spec.kind == RATIONAL:
            return Fraction(s)
        return int(s) % spec.p
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad element literal {text!r} for {spec}") from None


def format_raw(spec: FieldSpec, v: Raw) -> str:
    return str(v)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: Raw

    def _check(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedFields(f"cannot combine {self.spec} and {other.spec}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec(other)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(self.value, o.value))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return format_raw(self.spec, self.value)

    def __repr__(self):
        return f"{self.value}@{self.spec.tag}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def canonicalize(x: FieldElement) -> FieldElement:
    return FieldElement(x.spec, x.spec.reduce(x.value))


def field_axiom_violations(spec: FieldSpec, sample=None) -> list[str]:
    """Check the field axioms on ``sample`` (default: the whole carrier of a finite field).

    Returns a list of human-readable violations; empty means all laws hold.
    """
    els = list(spec.elements()) if sample is None else [spec(x) for x in sample]
    zero, one = spec(0), spec(1)
    bad = []
    for a in els:
        if a + zero != a or a * one != a:
            bad.append(f"identity fails at {a}")
        if a + (-a) != zero:
            bad.append(f"additive inverse fails at {a}")
        if a and a * a.inverse() != one:
            bad.append(f"multiplicative inverse fails at {a}")
    for a, b in itertools.product(els, repeat=2):
        if a + b != b + a or a * b != b * a:
            bad.append(f"commutativity fails at {a},{b}")
    for a, b, c in itertools.product(els, repeat=3):
        if a + (b + c) != (a + b) + c or a * (b * c) != (a * b) * c:
            bad.append(f"associativity fails at {a},{b},{c}")
        if a * (b + c) != a * b + a * c or (b + c) * a != b * a + c * a:
            bad.append(f"distributivity fails at {a},{b},{c}")
    return bad
