"""Rough sets, equivalence relations and vector matroids over exact fields."""

from .fields import GF2, Q, FieldElement, FieldSpec, field_make
from .linalg import ExactMatrix, SolutionSet, Vector
from .matroid import SetFamily, VectorMatroid
from .roughsets import ElementSet, Partition, Universe

__all__ = [
    "GF2",
    "Q",
    "ElementSet",
    "ExactMatrix",
    "FieldElement",
    "FieldSpec",
    "Partition",
    "SetFamily",
    "SolutionSet",
    "Universe",
    "Vector",
    "VectorMatroid",
    "field_make",
]
