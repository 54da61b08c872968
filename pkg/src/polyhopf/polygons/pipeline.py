"""
From frames to polygons and back.

phi_k sends a Stiefel frame to the closed unit-perimeter polygon whose i-th edge is the Hopf image
of the i-th column; lift inverts it column by column with the closed-form preimages.
"""

from collections.abc import Sequence

import numpy as np

from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.hopf.maps import hopf_vectors, preimage_coeffs
from polyhopf.hopf.types import UnitElement
from polyhopf.polygons.types import PolygonConfig, StiefelFrame, check_frame, orthonormalize_rows
from polyhopf.spin.rotation import Rotation
from polyhopf.utils.errors import (
    AlgebraMismatchError,
    DegeneratePolygonError,
    DimensionMismatchError,
    PolygonClosureError,
)


def phi_k(frame: StiefelFrame, tol: float | None = None) -> PolygonConfig:
    """
    The polygon (pi Phi(x_1, y_1), ..., pi Phi(x_k, y_k)) of a frame.

    Raises:
        FrameInvariantError: If the frame sums are violated beyond tol
    """
    check_frame(frame.columns, tol)
    return PolygonConfig(hopf_vectors(frame.columns))


def lift(polygon: PolygonConfig, thetas: Sequence[UnitElement] | None = None) -> StiefelFrame:
    """
    A frame X with phi_k(X) = polygon; column i is the preimage of edge i with parameter theta_i.

    The preimage rows are orthonormalized before the frame is built. For an exactly closed polygon
    of perimeter 1 this only moves rounding; a polygon with closure and perimeter errors within
    polygon_tol would otherwise give frame sums off by up to twice that.

    Args:
        polygon: Closed polygon in R^(1 + dim F)
        thetas: One fiber parameter per edge; all equal to the unit when omitted

    Raises:
        DimensionMismatchError: If the number of parameters differs from the number of edges
    """
    tag = polygon.tag
    if thetas is None:
        theta_coeffs = np.zeros((polygon.k, tag.dim))
        theta_coeffs[:, 0] = 1.0
    else:
        if len(thetas) != polygon.k:
            raise DimensionMismatchError("fiber parameters", polygon.k, len(thetas))
        for theta in thetas:
            if theta.tag is not tag:
                raise AlgebraMismatchError(tag, theta.tag)
        theta_coeffs = np.stack([theta.value.coeffs for theta in thetas])
    x, y = preimage_coeffs(polygon.edges[:, 0], polygon.edges[:, 1:], theta_coeffs)
    return StiefelFrame(tag, orthonormalize_rows(x, y))


def normalize(raw_edges: FloatArray | Sequence[Sequence[float]]) -> PolygonConfig:
    """
    Scale a closed polygon to unit perimeter.

    Raises:
        DegeneratePolygonError: If every edge is zero
        PolygonClosureError: If the edges do not sum to zero relative to the perimeter
    """
    edges = np.asarray(raw_edges, dtype=np.float64)
    perimeter = float(np.linalg.norm(edges, axis=-1).sum())
    if perimeter == 0.0:
        raise DegeneratePolygonError()
    tol = get_settings().polygon_tol
    residual = float(np.linalg.norm(edges.sum(axis=0))) / perimeter
    if residual > tol:
        raise PolygonClosureError("closure", residual, tol)
    return PolygonConfig(edges / perimeter)


def rotate_polygon(rotation: Rotation, polygon: PolygonConfig) -> PolygonConfig:
    """Apply a rotation edge by edge."""
    if rotation.n != polygon.n:
        raise DimensionMismatchError("rotation size", polygon.n, rotation.n)
    return PolygonConfig(rotation.apply(polygon.edges))


def fiber_rank(polygon: PolygonConfig, edge_zero_tol: float | None = None) -> int:
    """Number l of nonzero edges; the fiber of phi_k over the polygon is F(1)^l."""
    edge_zero_tol = edge_zero_tol if edge_zero_tol is not None else get_settings().edge_zero_tol
    return int(np.count_nonzero(polygon.edge_lengths() >= edge_zero_tol))
