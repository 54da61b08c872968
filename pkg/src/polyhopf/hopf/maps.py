"""
The modified Hopf map, its closed-form preimages and the F(1) fiber actions.

Each operation comes in two layers: a ``*_coeffs`` kernel on coefficient arrays with arbitrary
leading batch axes (used by the polygon pipeline and the verification suites) and a value-level
function on Spinor / HopfImage / UnitElement.
"""

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.algebra.kernels import (
    conj_coeffs,
    inverse_coeffs,
    mul_coeffs,
    norm_sq_coeffs,
    unit_coeffs,
)
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.hopf.types import HopfImage, Spinor, UnitElement
from polyhopf.utils.errors import AlgebraMismatchError, ZeroFiberError
from polyhopf.utils.logging import get_logger

logger = get_logger(__name__)


def hopf_vector_coeffs(x: FloatArray, y: FloatArray) -> FloatArray:
    """pi(Phi(x, y)) = ((|x|^2 - |y|^2) / 2, x conj(y)) as (..., 1 + d) real vectors."""
    lam = 0.5 * (norm_sq_coeffs(x) - norm_sq_coeffs(y))
    alpha = mul_coeffs(x, conj_coeffs(y))
    return np.concatenate([lam[..., None], alpha], axis=-1)


def hopf_vectors(spinors: FloatArray) -> FloatArray:
    """pi(Phi(v)) for spinors stored as (..., 2, d)."""
    return hopf_vector_coeffs(spinors[..., 0, :], spinors[..., 1, :])


def preimage_coeffs(
    lam: FloatArray, alpha: FloatArray, theta: FloatArray
) -> tuple[FloatArray, FloatArray]:
    """
    A spinor (x, y) over each target (lam, alpha), parameterized by the unit theta.

    With s = sqrt(lam^2 + |alpha|^2) the radii satisfy |x|^2 = lam + s and |y|^2 = s - lam.
    The smaller radius is computed as |alpha|^2 divided by the larger one to avoid cancellation.
    For alpha = 0 the direction alpha / |alpha| is replaced by the unit, which yields
    (sqrt(2 lam) theta, 0) for lam > 0, (0, sqrt(-2 lam) theta) for lam < 0 and (0, 0)
    at the origin.
    """
    lam = np.asarray(lam, dtype=np.float64)
    alpha_sq = norm_sq_coeffs(alpha)
    s = np.sqrt(lam**2 + alpha_sq)
    big = np.where(lam >= 0.0, lam + s, s - lam)
    safe_big = np.where(big > 0.0, big, 1.0)
    small = np.where(big > 0.0, alpha_sq / safe_big, 0.0)
    x_sq = np.where(lam >= 0.0, big, small)
    y_sq = np.where(lam >= 0.0, small, big)

    alpha_norm = np.sqrt(alpha_sq)
    has_alpha = alpha_norm > 0.0
    direction = np.where(
        has_alpha[..., None],
        alpha / np.where(has_alpha, alpha_norm, 1.0)[..., None],
        unit_coeffs(alpha.shape[-1]),
    )
    x = np.sqrt(x_sq)[..., None] * mul_coeffs(direction, theta)
    y = np.sqrt(y_sq)[..., None] * np.broadcast_to(theta, x.shape)
    return x, y


def coordinate_is_zero(y: FloatArray, spinor_norm_sq: FloatArray, zero_tol: float) -> FloatArray:
    """Relative zero test |y| <= zero_tol * |v| used to branch the octonion action."""
    return norm_sq_coeffs(y) <= (zero_tol**2) * spinor_norm_sq


def fiber_act_coeffs(
    x: FloatArray, y: FloatArray, c: FloatArray, octonionic: bool, zero_tol: float
) -> tuple[FloatArray, FloatArray]:
    """
    Right action of a unit c on spinors.

    Associative algebras use (xc, yc). Octonions use ((x y^-1)(y c), y c) when y != 0 and
    (x c, 0) when y = 0.
    """
    yc = mul_coeffs(y, c)
    if not octonionic:
        return mul_coeffs(x, c), np.array(yc)
    y_zero = coordinate_is_zero(y, norm_sq_coeffs(x) + norm_sq_coeffs(y), zero_tol)
    safe_y = np.where(y_zero[..., None], unit_coeffs(y.shape[-1]), y)
    modified = mul_coeffs(mul_coeffs(x, inverse_coeffs(safe_y)), yc)
    x_out = np.where(y_zero[..., None], mul_coeffs(x, c), modified)
    y_out = np.where(y_zero[..., None], 0.0, yc)
    return x_out, y_out


def fiber_witness_coeffs(
    x: FloatArray, y: FloatArray, a: FloatArray, b: FloatArray, zero_tol: float
) -> FloatArray:
    """
    Unit c with (x, y).c = (a, b), assuming both spinors share a nonzero Hopf image.

    c = y^-1 b when y != 0, otherwise c = x^-1 a; the result is renormalized.
    """
    y_zero = coordinate_is_zero(y, norm_sq_coeffs(x) + norm_sq_coeffs(y), zero_tol)
    unit = unit_coeffs(x.shape[-1])
    safe_y = np.where(y_zero[..., None], unit, y)
    safe_x = np.where(norm_sq_coeffs(x)[..., None] > 0.0, x, unit)
    raw = np.where(
        y_zero[..., None],
        mul_coeffs(inverse_coeffs(safe_x), a),
        mul_coeffs(inverse_coeffs(safe_y), b),
    )
    size = np.sqrt(norm_sq_coeffs(raw))
    return np.asarray(raw / np.where(size > 0.0, size, 1.0)[..., None])


def hopf_phi(v: Spinor) -> HopfImage:
    """Phi(v) = v v* - tr(v v*) I / 2, returned as (lambda, alpha)."""
    vector = hopf_vector_coeffs(v.x.coeffs, v.y.coeffs)
    return HopfImage(float(vector[0]), AlgebraElement(v.tag, vector[1:]))


def hopf_preimage(target: HopfImage, theta: UnitElement | None = None) -> Spinor:
    """
    Closed-form spinor v with hopf_phi(v) = target.

    Args:
        target: Point (lambda, alpha) of R + F
        theta: Fiber parameter; the unit when omitted

    Returns:
        (sqrt(lam + s) (alpha/|alpha|) theta, sqrt(s - lam) theta) with s = |target|
    """
    tag = target.tag
    if theta is None:
        theta = UnitElement.one(tag)
    if theta.tag is not tag:
        raise AlgebraMismatchError(tag, theta.tag)
    x, y = preimage_coeffs(np.float64(target.lam), target.alpha.coeffs, theta.value.coeffs)
    return Spinor(AlgebraElement(tag, x), AlgebraElement(tag, y))


def fiber_act(v: Spinor, c: UnitElement, zero_tol: float | None = None) -> Spinor:
    """Act on v by c while staying in the Hopf fiber of v."""
    if v.tag is not c.tag:
        raise AlgebraMismatchError(v.tag, c.tag)
    zero_tol = zero_tol if zero_tol is not None else get_settings().zero_tol
    x, y = fiber_act_coeffs(
        v.x.coeffs,
        v.y.coeffs,
        c.value.coeffs,
        octonionic=v.tag is AlgebraTag.OCTONION,
        zero_tol=zero_tol,
    )
    return Spinor(AlgebraElement(v.tag, x), AlgebraElement(v.tag, y))


def fiber_witness(
    v: Spinor, w: Spinor, tol: float | None = None, zero_tol: float | None = None
) -> UnitElement | None:
    """
    Find c in F(1) with fiber_act(v, c) = w.

    Args:
        v: Source spinor
        w: Target spinor
        tol: Relative tolerance for deciding Phi(v) = Phi(w)

    Returns:
        The witness, or None when the Hopf images differ beyond tol

    Raises:
        ZeroFiberError: If both spinors are zero
    """
    if v.tag is not w.tag:
        raise AlgebraMismatchError(v.tag, w.tag)
    settings = get_settings()
    tol = tol if tol is not None else settings.default_tol
    zero_tol = zero_tol if zero_tol is not None else settings.zero_tol

    scale = 0.5 * (v.norm_sq + w.norm_sq)
    if scale == 0.0:
        raise ZeroFiberError()
    gap = hopf_vector_coeffs(v.x.coeffs, v.y.coeffs) - hopf_vector_coeffs(w.x.coeffs, w.y.coeffs)
    distance = float(np.linalg.norm(gap))
    if distance > tol * scale or v.norm_sq == 0.0 or w.norm_sq == 0.0:
        logger.debug(
            "Spinors lie in different fibers",
            extra={"image_distance": distance, "scale": scale},
        )
        return None
    c = fiber_witness_coeffs(v.x.coeffs, v.y.coeffs, w.x.coeffs, w.y.coeffs, zero_tol)
    return UnitElement(AlgebraElement(v.tag, c))
