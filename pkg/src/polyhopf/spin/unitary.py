"""
SU(2, F) for the associative algebras: SO(2), SU(2) and Sp(2).

Matrices are stored as (2, 2, d) coefficient arrays; entry [i, j] is an element of F.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.algebra.kernels import (
    conj_coeffs,
    dagger_coeffs,
    matmul_coeffs,
    mul_coeffs,
    norm_sq_coeffs,
    unit_coeffs,
)
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.hopf.types import Spinor
from polyhopf.seeding import SeedLike, as_generator
from polyhopf.spin.rotation import Rotation
from polyhopf.utils.errors import (
    AlgebraMismatchError,
    InvalidRotationError,
    UnsupportedAlgebraError,
)


def require_associative(tag: AlgebraTag, operation: str) -> None:
    if not tag.associative:
        raise UnsupportedAlgebraError(tag, operation)


def identity_coeffs(dim: int) -> FloatArray:
    eye = np.zeros((2, 2, dim))
    eye[0, 0] = unit_coeffs(dim)
    eye[1, 1] = unit_coeffs(dim)
    return eye


def determinant_coeffs(entries: FloatArray) -> FloatArray:
    """ad - bc, meaningful for the commutative algebras R and C."""
    return mul_coeffs(entries[0, 0], entries[1, 1]) - mul_coeffs(entries[0, 1], entries[1, 0])


@dataclass(frozen=True, eq=False, slots=True)
class SpecialUnitary2:
    """
    A 2 x 2 matrix A over R, C or H with A A* = A* A = I.

    For R and C the determinant must also be 1; over H unitarity already forces it.
    """

    tag: AlgebraTag
    entries: FloatArray

    def __post_init__(self) -> None:
        require_associative(self.tag, "SU(2, F)")
        entries = np.array(self.entries, dtype=np.float64)
        if entries.shape != (2, 2, self.tag.dim):
            raise InvalidRotationError("shape", float("inf"), 0.0)
        tol = get_settings().group_tol
        eye = identity_coeffs(self.tag.dim)
        adjoint = dagger_coeffs(entries)
        residual = max(
            float(np.max(np.abs(matmul_coeffs(entries, adjoint) - eye))),
            float(np.max(np.abs(matmul_coeffs(adjoint, entries) - eye))),
        )
        if residual > tol:
            raise InvalidRotationError("unitarity", residual, tol)
        if self.tag is not AlgebraTag.QUATERNION:
            det = determinant_coeffs(entries)
            det_gap = float(np.max(np.abs(det - unit_coeffs(self.tag.dim))))
            if det_gap > tol:
                raise InvalidRotationError("determinant", det_gap, tol)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, tag: AlgebraTag) -> SpecialUnitary2:
        return cls(tag, identity_coeffs(tag.dim))

    @classmethod
    def from_elements(
        cls, rows: tuple[tuple[AlgebraElement, AlgebraElement], ...]
    ) -> SpecialUnitary2:
        tag = rows[0][0].tag
        for row in rows:
            for item in row:
                if item.tag is not tag:
                    raise AlgebraMismatchError(tag, item.tag)
        return cls(tag, np.array([[item.coeffs for item in row] for row in rows]))

    def element(self, row: int, column: int) -> AlgebraElement:
        return AlgebraElement(self.tag, self.entries[row, column])

    def adjoint(self) -> SpecialUnitary2:
        return SpecialUnitary2(self.tag, dagger_coeffs(self.entries))

    def __matmul__(self, other: SpecialUnitary2) -> SpecialUnitary2:
        if other.tag is not self.tag:
            raise AlgebraMismatchError(self.tag, other.tag)
        return SpecialUnitary2(self.tag, matmul_coeffs(self.entries, other.entries))

    def __neg__(self) -> SpecialUnitary2:
        return SpecialUnitary2(self.tag, -self.entries)


def su2_apply_coeffs(entries: FloatArray, spinors: FloatArray) -> FloatArray:
    """A v for spinors of shape (..., 2, d)."""
    return mul_coeffs(entries, spinors[..., None, :, :]).sum(axis=-2)


def su2_apply(A: SpecialUnitary2, v: Spinor) -> Spinor:
    """
    Matrix-times-column action on spinors.

    Raises:
        UnsupportedAlgebraError: For octonions, which act through generator words instead
        AlgebraMismatchError: If A and v live over different algebras
    """
    require_associative(v.tag, "su2_apply")
    if A.tag is not v.tag:
        raise AlgebraMismatchError(A.tag, v.tag)
    return Spinor.from_coeffs(v.tag, su2_apply_coeffs(A.entries, v.coeffs()))


def su2_random(tag: AlgebraTag, seed: SeedLike) -> SpecialUnitary2:
    """
    Pseudo-random element of SO(2), SU(2) or Sp(2).

    Two Gaussian columns are orthonormalized with right scalars, v2 <- v2 - v1 (v1* v2), which is
    valid because R, C and H are associative. For R and C the second column is then rescaled to
    make the determinant 1.
    """
    require_associative(tag, "su2_random")
    rng = as_generator(seed)
    columns = rng.standard_normal((2, 2, tag.dim))
    first = columns[0] / np.sqrt(norm_sq_coeffs(columns[0]).sum())
    overlap = mul_coeffs(conj_coeffs(first), columns[1]).sum(axis=0)
    second = columns[1] - mul_coeffs(first, overlap)
    second = second / np.sqrt(norm_sq_coeffs(second).sum())
    entries = np.stack([first, second], axis=1)
    if tag is not AlgebraTag.QUATERNION:
        det = determinant_coeffs(entries)
        entries[:, 1] = mul_coeffs(entries[:, 1], conj_coeffs(det))
    return SpecialUnitary2(tag, entries)


def hermitian_basis(tag: AlgebraTag) -> FloatArray:
    """
    The 1 + d traceless Hermitian matrices pi^-1(e_k), shape (1 + d, 2, 2, d).
    """
    dim = tag.dim
    basis = np.zeros((1 + dim, 2, 2, dim))
    basis[0, 0, 0, 0] = 1.0
    basis[0, 1, 1, 0] = -1.0
    for k in range(dim):
        alpha = np.zeros(dim)
        alpha[k] = 1.0
        basis[1 + k, 0, 1] = alpha
        basis[1 + k, 1, 0] = conj_coeffs(alpha)
    return basis


def adjoint_rotation(A: SpecialUnitary2) -> Rotation:
    """
    The rotation X -> pi(A pi^-1(X) A*) of R + F.

    Evaluates Ad_A on the standard basis of traceless Hermitian matrices; column k of the result
    is pi of the image of the k-th basis matrix.
    """
    require_associative(A.tag, "adjoint_rotation")
    conjugated = matmul_coeffs(A.entries, hermitian_basis(A.tag))
    images = matmul_coeffs(conjugated, dagger_coeffs(A.entries))
    columns = np.concatenate([images[:, 0, 0, :1], images[:, 0, 1, :]], axis=-1)
    return Rotation(columns.T)


def quaternion_complexify(A: SpecialUnitary2 | FloatArray) -> np.ndarray:
    """
    The embedding h: Mat(2, H) -> Mat(4, C), A = A1 + A2 j -> ((A1, A2), (-conj(A2), conj(A1))).

    Quaternion coefficients are (a, b, c, d) over (e, e1, e2, e4) = (1, i, j, k), so that
    a + b i + c j + d k = (a + b i) + (c + d i) j.
    """
    entries = A.entries if isinstance(A, SpecialUnitary2) else np.asarray(A, dtype=np.float64)
    if entries.shape[-1] != AlgebraTag.QUATERNION.dim:
        raise UnsupportedAlgebraError(entries.shape[-1], "quaternion_complexify")
    first = entries[..., 0] + 1j * entries[..., 1]
    second = entries[..., 2] + 1j * entries[..., 3]
    return np.block([[first, second], [-np.conj(second), np.conj(first)]])
