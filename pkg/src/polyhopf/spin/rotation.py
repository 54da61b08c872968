"""
Rotations of R + F and Haar sampling of SO(n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import special_ortho_group

from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.seeding import SeedLike, as_generator
from polyhopf.utils.errors import DimensionMismatchError, InvalidRotationError

HOPF_DIMS = (2, 3, 5, 9)


def orthogonality_residual(matrix: FloatArray) -> float:
    eye = np.eye(matrix.shape[0])
    return float(np.max(np.abs(matrix @ matrix.T - eye)))


@dataclass(frozen=True, eq=False, slots=True)
class Rotation:
    """An element of SO(n) acting on R + F, n in {2, 3, 5, 9}."""

    matrix: FloatArray

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError("rotation matrix", "square", matrix.shape)
        if matrix.shape[0] not in HOPF_DIMS:
            raise DimensionMismatchError("rotation size", HOPF_DIMS, matrix.shape[0])
        tol = get_settings().group_tol
        residual = orthogonality_residual(matrix)
        if residual > tol:
            raise InvalidRotationError("orthogonality", residual, tol)
        det_gap = abs(float(np.linalg.det(matrix)) - 1.0)
        if det_gap > tol:
            raise InvalidRotationError("determinant", det_gap, tol)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    @classmethod
    def identity(cls, n: int) -> Rotation:
        return cls(np.eye(n))

    def __matmul__(self, other: Rotation) -> Rotation:
        if other.n != self.n:
            raise DimensionMismatchError("rotation composition", self.n, other.n)
        return Rotation(self.matrix @ other.matrix)

    def apply(self, vectors: FloatArray) -> FloatArray:
        """Rotate vectors stored along the last axis."""
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.shape[-1] != self.n:
            raise DimensionMismatchError("vector length", self.n, vectors.shape[-1])
        result: FloatArray = vectors @ self.matrix.T
        return result

    def distance(self, other: Rotation) -> float:
        """Frobenius distance between the two matrices."""
        return float(np.linalg.norm(self.matrix - other.matrix))


def random_rotation(n: int, seed: SeedLike) -> Rotation:
    """Haar-distributed element of SO(n)."""
    matrix = special_ortho_group.rvs(dim=n, random_state=as_generator(seed))
    return Rotation(np.asarray(matrix))
