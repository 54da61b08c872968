"""
Constructive Cartan-Dieudonne decomposition.

A rotation R of R + F is written as a product of Householder reflections H_1 ... H_m by fixing one
column at a time. Because det R = 1 the count m is even, and since H = -rho for the generator with
the same normal, R = rho_1 ... rho_m is the image of the word g_1 ... g_m.
"""

import numpy as np

from polyhopf.algebra.element import AlgebraTag
from polyhopf.algebra.kernels import matmul_coeffs
from polyhopf.algebra.tables import FloatArray
from polyhopf.spin.generators import GeneratorWord, SpinGenerator
from polyhopf.spin.rotation import Rotation
from polyhopf.spin.unitary import SpecialUnitary2, identity_coeffs, require_associative
from polyhopf.utils.errors import DimensionMismatchError
from polyhopf.utils.logging import get_logger

logger = get_logger(__name__)


def _column_gap(column: FloatArray, j: int) -> FloatArray:
    """
    column - e_j for a unit column, with the j-th entry taken from the other entries.

    Near e_j the difference column[j] - 1 is pure rounding; -|rest|^2 / (1 + column[j]) is not.
    """
    gap = column.copy()
    rest = float(gap @ gap) - gap[j] ** 2
    gap[j] = gap[j] - 1.0 if gap[j] < 0.0 else -rest / (1.0 + gap[j])
    return gap


def reflection_normals(matrix: FloatArray) -> list[FloatArray]:
    """
    Unit normals w_1, ..., w_m with matrix = H(w_1) ... H(w_m), H(w) = I - 2 w w^t.

    Only the first n - 1 columns are reflected onto e_j. The last column is then +-e_n, and
    one more reflection fixes its sign, so a rotation always gets an even count m <= n.
    """
    current = np.array(matrix, dtype=np.float64)
    n = current.shape[0]
    normals: list[FloatArray] = []
    for j in range(n - 1):
        gap = _column_gap(current[:, j], j)
        size = float(np.linalg.norm(gap))
        if size == 0.0:
            continue
        w = gap / size
        current = current - 2.0 * np.outer(w, w @ current)
        normals.append(w)
    if current[-1, -1] < 0.0:
        last = np.zeros(n)
        last[-1] = 1.0
        normals.append(last)
    return normals


def _require_size(rotation: Rotation, tag: AlgebraTag) -> None:
    if rotation.n != tag.hopf_dim:
        raise DimensionMismatchError("rotation size", tag.hopf_dim, rotation.n)


def word_from_rotation(rotation: Rotation, tag: AlgebraTag = AlgebraTag.OCTONION) -> GeneratorWord:
    """
    A generator word whose induced rotation is the given one.

    The word has even length at most 1 + dim F, so at most 8 generators for SO(9).
    """
    _require_size(rotation, tag)
    normals = reflection_normals(rotation.matrix)
    logger.debug(
        "Decomposed rotation into reflections",
        extra={"algebra": tag.symbol, "reflections": len(normals)},
    )
    return GeneratorWord(tag, tuple(SpinGenerator.from_normal(tag, w) for w in normals))


def unitary_from_rotation(rotation: Rotation, tag: AlgebraTag) -> SpecialUnitary2:
    """
    An element A of SU(2, F) with adjoint_rotation(A) = rotation, for F = R, C, H.

    Multiplies out the generator matrices of word_from_rotation; each has determinant -1 over
    the commutative algebras and the word has even length.
    """
    require_associative(tag, "unitary_from_rotation")
    word = word_from_rotation(rotation, tag)
    entries = identity_coeffs(tag.dim)
    for factor in word:
        entries = matmul_coeffs(entries, factor.matrix_coeffs())
    return SpecialUnitary2(tag, entries)
