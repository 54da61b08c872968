"""
Stiefel frames, closed polygons and their quotient invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.algebra.kernels import conj_coeffs, mul_coeffs, norm_sq_coeffs
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.hopf.types import Spinor
from polyhopf.spin.rotation import HOPF_DIMS
from polyhopf.utils.errors import (
    DegenerateDrawError,
    DegeneratePolygonError,
    DimensionMismatchError,
    FrameInvariantError,
    PolygonClosureError,
)

MIN_EDGES = 3


def _require_edge_count(k: int) -> None:
    if k < MIN_EDGES:
        raise DimensionMismatchError("number of edges", f">= {MIN_EDGES}", k)


def frame_residuals(columns: FloatArray) -> dict[str, float]:
    """
    Residuals of the three Stiefel sums of a (k, 2, d) column array.

    Keys name the violated sum: "sum |x_i|^2 = 1", "sum |y_i|^2 = 1" and "sum x_i conj(y_i) = 0".
    """
    x, y = columns[:, 0], columns[:, 1]
    cross = mul_coeffs(x, conj_coeffs(y)).sum(axis=0)
    return {
        "sum |x_i|^2 = 1": abs(float(norm_sq_coeffs(x).sum()) - 1.0),
        "sum |y_i|^2 = 1": abs(float(norm_sq_coeffs(y).sum()) - 1.0),
        "sum x_i conj(y_i) = 0": float(np.sqrt(norm_sq_coeffs(cross))),
    }


def check_frame(columns: FloatArray, tol: float | None = None) -> None:
    """
    Raises:
        FrameInvariantError: Naming the first Stiefel sum whose residual exceeds tol
    """
    tol = tol if tol is not None else get_settings().frame_tol
    for name, residual in frame_residuals(columns).items():
        if residual > tol:
            raise FrameInvariantError(name, residual, tol)


def _row_norm(row: FloatArray) -> float:
    return float(np.sqrt(norm_sq_coeffs(row).sum()))


def orthonormalize_rows(x: FloatArray, y: FloatArray, floor: float = 0.0) -> FloatArray:
    """
    Gram-Schmidt on two rows of k algebra elements, returned as (k, 2, d) columns.

    Row x is normalized, row y loses its component c = sum_j y_j conj(x_j) as y_i - c x_i and is
    normalized in turn. Over the octonions the projection still works because
    (c x_i) conj(x_i) = c |x_i|^2 holds in every alternative algebra.

    Raises:
        DegenerateDrawError: If a row norm falls below floor
    """
    x_norm = _row_norm(x)
    if x_norm <= floor:
        raise DegenerateDrawError(f"First row norm {x_norm:.3e} is degenerate")
    x = x / x_norm
    overlap = mul_coeffs(y, conj_coeffs(x)).sum(axis=0)
    y = y - mul_coeffs(overlap, x)
    y_norm = _row_norm(y)
    if y_norm <= floor:
        raise DegenerateDrawError(f"Second row norm {y_norm:.3e} is degenerate")
    return np.stack([x, y / y_norm], axis=1)


@dataclass(frozen=True, eq=False, slots=True)
class StiefelFrame:
    """
    A 2 x k matrix X over F with X X* = I_2, stored column by column as (k, 2, d).

    Column i is the spinor (x_i, y_i).
    """

    tag: AlgebraTag
    columns: FloatArray

    def __post_init__(self) -> None:
        columns = np.array(self.columns, dtype=np.float64)
        if columns.ndim != 3 or columns.shape[1:] != (2, self.tag.dim):
            raise DimensionMismatchError("frame columns", f"(k, 2, {self.tag.dim})", columns.shape)
        _require_edge_count(columns.shape[0])
        check_frame(columns)
        columns.setflags(write=False)
        object.__setattr__(self, "columns", columns)

    @property
    def k(self) -> int:
        return int(self.columns.shape[0])

    @property
    def x(self) -> FloatArray:
        return self.columns[:, 0]

    @property
    def y(self) -> FloatArray:
        return self.columns[:, 1]

    def column(self, i: int) -> Spinor:
        return Spinor(
            AlgebraElement(self.tag, self.columns[i, 0]),
            AlgebraElement(self.tag, self.columns[i, 1]),
        )

    @classmethod
    def from_spinors(cls, spinors: list[Spinor]) -> StiefelFrame:
        tag = spinors[0].tag
        return cls(tag, np.stack([v.coeffs() for v in spinors]))

    def distance(self, other: StiefelFrame) -> float:
        return float(np.max(np.abs(self.columns - other.columns)))


@dataclass(frozen=True, eq=False, slots=True)
class PolygonConfig:
    """k edge vectors in R^n, closed and of unit perimeter."""

    edges: FloatArray

    def __post_init__(self) -> None:
        edges = np.array(self.edges, dtype=np.float64)
        if edges.ndim != 2 or edges.shape[1] not in HOPF_DIMS:
            raise DimensionMismatchError("polygon edges", f"(k, n), n in {HOPF_DIMS}", edges.shape)
        _require_edge_count(edges.shape[0])
        lengths = np.linalg.norm(edges, axis=1)
        if not np.any(lengths > 0.0):
            raise DegeneratePolygonError()
        tol = get_settings().polygon_tol
        closure = float(np.linalg.norm(edges.sum(axis=0)))
        if closure > tol:
            raise PolygonClosureError("closure", closure, tol)
        perimeter_gap = abs(float(lengths.sum()) - 1.0)
        if perimeter_gap > tol:
            raise PolygonClosureError("perimeter", perimeter_gap, tol)
        edges.setflags(write=False)
        object.__setattr__(self, "edges", edges)

    @property
    def n(self) -> int:
        return int(self.edges.shape[1])

    @property
    def k(self) -> int:
        return int(self.edges.shape[0])

    @property
    def tag(self) -> AlgebraTag:
        return AlgebraTag.from_hopf_dim(self.n)

    def edge_lengths(self) -> FloatArray:
        return np.linalg.norm(self.edges, axis=1)

    @property
    def perimeter(self) -> float:
        return float(self.edge_lengths().sum())

    @property
    def closure_residual(self) -> float:
        return float(np.linalg.norm(self.edges.sum(axis=0)))


Orientation = Literal[1, -1] | None


@dataclass(frozen=True, eq=False, slots=True)
class QuotientInvariant:
    """
    Canonical data of the SO(n) class of a polygon.

    gram[i, j] = <edge_i, edge_j>; orientation is the sign of the determinant of the first n
    linearly independent edges, or None when the edges span less than R^n.
    """

    gram: FloatArray
    orientation: Orientation
    rank: int
