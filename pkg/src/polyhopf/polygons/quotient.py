"""
Equality in the polygon spaces SO(n) \\ M_k(R^n) and O(n) \\ M_k(R^n).

Two edge configurations are related by an orthogonal map exactly when their Gram matrices agree.
For configurations spanning R^n the sign of the determinant of a canonically chosen set of n edges
separates the two SO(n) classes inside one O(n) class; below full rank the classes coincide.
"""

import numpy as np

from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.polygons.types import Orientation, PolygonConfig, QuotientInvariant
from polyhopf.utils.errors import DimensionMismatchError


def independent_edges(edges: FloatArray, rank_tol: float) -> list[int]:
    """Indices of the lexicographically first maximal set of linearly independent edges."""
    chosen: list[int] = []
    for i in range(edges.shape[0]):
        candidate = edges[chosen + [i]]
        if np.linalg.matrix_rank(candidate, tol=rank_tol) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == edges.shape[1]:
                break
    return chosen


def quotient_invariant(polygon: PolygonConfig, rank_tol: float | None = None) -> QuotientInvariant:
    rank_tol = rank_tol if rank_tol is not None else get_settings().rank_tol
    edges = polygon.edges
    chosen = independent_edges(edges, rank_tol)
    orientation: Orientation = None
    if len(chosen) == polygon.n:
        orientation = 1 if np.linalg.det(edges[chosen].T) > 0.0 else -1
    return QuotientInvariant(gram=edges @ edges.T, orientation=orientation, rank=len(chosen))


def _require_same_shape(p: PolygonConfig, q: PolygonConfig) -> None:
    if p.edges.shape != q.edges.shape:
        raise DimensionMismatchError("polygon shape", p.edges.shape, q.edges.shape)


def gram_deviation(p: PolygonConfig, q: PolygonConfig) -> float:
    """Largest entrywise difference of the two Gram matrices."""
    _require_same_shape(p, q)
    return float(np.max(np.abs(p.edges @ p.edges.T - q.edges @ q.edges.T)))


def equivalent_mod_O(p: PolygonConfig, q: PolygonConfig, tol: float | None = None) -> bool:
    tol = tol if tol is not None else get_settings().default_tol
    return gram_deviation(p, q) <= tol


def equivalent_mod_SO(p: PolygonConfig, q: PolygonConfig, tol: float | None = None) -> bool:
    """
    True iff the Gram matrices agree within tol and the orientations agree (None matches None).
    """
    if not equivalent_mod_O(p, q, tol):
        return False
    return quotient_invariant(p).orientation == quotient_invariant(q).orientation
