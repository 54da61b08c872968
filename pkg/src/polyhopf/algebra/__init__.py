"""Arithmetic of the normed division algebras R, C, H and O."""

from polyhopf.algebra.element import (
    AlgebraElement,
    AlgebraTag,
    conj,
    imag_part,
    inner,
    inverse,
    mul,
    norm,
    norm_sq,
    real_part,
)
from polyhopf.algebra.tables import (
    StructureTable,
    octonion_table,
    relation_instances,
    table_for,
)

__all__ = [
    "AlgebraElement",
    "AlgebraTag",
    "StructureTable",
    "conj",
    "imag_part",
    "inner",
    "inverse",
    "mul",
    "norm",
    "norm_sq",
    "octonion_table",
    "real_part",
    "relation_instances",
    "table_for",
]
