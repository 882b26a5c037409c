"""Text formats for matrices, partitions, sets, families and relations.

Matrix file::

    field gf2
    labels x1 x2 x3        (optional; defaults to x1..xn)
    1 0 1
    0 1 1

Partition file::

    universe x1 x2 x3 x4 x5
    block x1 x3
    block x2 x4 x5

Blank lines and lines starting with ``#`` are ignored in both.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidPartition, ParseError, RoughMatError
from .fields import parse_field_tag, parse_raw
from .linalg import ExactMatrix, default_labels
from .matroid import SetFamily
from .roughsets import ElementSet, Partition, Universe


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((no, s.split()))
    return out


def sniff(text: str) -> str:
    """'matrix' or 'partition', from the first keyword."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input")
    head = lines[0][1][0]
    if head == "field":
        return "matrix"
    if head == "universe":
        return "partition"
    raise ParseError(f"line {lines[0][0]}: expected 'field' or 'universe', got {head!r}")


def parse_matrix(text: str) -> ExactMatrix:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "field" or len(lines[0][1]) != 2:
        raise ParseError("line 1: expected 'field <tag>'")
    spec = parse_field_tag(lines[0][1][1])
    rest = lines[1:]
    labels = None
    if rest and rest[0][1][0] == "labels":
        labels = rest[0][1][1:]
        rest = rest[1:]
    if not rest:
        raise ParseError("matrix has no rows")
    width = len(rest[0][1])
    rows = []
    for no, toks in rest:
        if len(toks) != width:
            raise ParseError(f"line {no}: row has {len(toks)} entries, expected {width}")
        rows.append([parse_raw(spec, t) for t in toks])
    if labels is None:
        labels = list(default_labels(width))
    elif len(labels) != width:
        raise ParseError(f"{len(labels)} labels for {width} columns")
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate column labels")
    return ExactMatrix(spec, tuple(tuple(r) for r in rows), tuple(labels))


def parse_partition(text: str) -> Partition:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "universe" or len(lines[0][1]) < 2:
        raise ParseError("line 1: expected 'universe <id> ...'")
    try:
        U = Universe(tuple(lines[0][1][1:]))
        blocks = []
        for no, toks in lines[1:]:
            if toks[0] != "block":
                raise ParseError(f"line {no}: expected 'block <id> ...'")
            if len(set(toks[1:])) != len(toks) - 1:
                raise InvalidPartition(f"line {no}: repeated element in block")
            blocks.append(U.subset(toks[1:]))
        return Partition(U, tuple(blocks))
    except RoughMatError:
        raise
    except (ValueError, KeyError) as e:
        raise ParseError(str(e)) from None


def read_input(path: str | Path):
    text = Path(path).read_text(encoding="utf-8")
    kind = sniff(text)
    return parse_matrix(text) if kind == "matrix" else parse_partition(text)


def parse_set(U: Universe, literal: str) -> ElementSet:
    """``x1,x2`` / ``x1 x2`` / ``{x1,x2}`` / ``{}`` / empty string."""
    s = literal.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    toks = [t for t in s.replace(",", " ").split() if t]
    return U.subset(toks)


def format_set(S: ElementSet) -> str:
    return " ".join(S.labels)


def format_family(F: SetFamily) -> str:
    return "".join(format_set(s) + "\n" for s in F)


def format_matrix(A: ExactMatrix) -> str:
    lines = [f"field {A.spec.tag}", "labels " + " ".join(A.col_labels)]
    lines += [" ".join(str(x) for x in row) for row in A.data]
    return "\n".join(lines) + "\n"


def format_partition(P: Partition) -> str:
    lines = ["universe " + " ".join(P.universe.elements)]
    lines += ["block " + " ".join(b.labels) for b in P.blocks]
    return "\n".join(lines) + "\n"


def format_relation(pairs) -> str:
    return "".join(f"{a} {b}\n" for a, b in pairs)
