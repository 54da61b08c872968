"""
Batched coefficient kernels.

Every function works on float arrays whose last axis holds the d coefficients of an algebra
element, so the same code multiplies a single pair or a million pairs. Leading axes broadcast.
The product contracts the outer product of the operands with the dense structure tensor; on
basis elements every term is 0 or +-1, which keeps basis products exact.
"""

from functools import lru_cache

import numpy as np

from polyhopf.algebra.tables import FloatArray, table_for


@lru_cache
def structure_tensor(dim: int) -> FloatArray:
    """Flattened (d*d, d) structure tensor of the algebra of dimension dim."""
    tensor = table_for(dim).tensor().reshape(dim * dim, dim)
    tensor.setflags(write=False)
    return tensor


def mul_coeffs(a: FloatArray, b: FloatArray) -> FloatArray:
    dim = a.shape[-1]
    outer = a[..., :, None] * b[..., None, :]
    flat = outer.reshape(outer.shape[:-2] + (dim * dim,))
    result: FloatArray = flat @ structure_tensor(dim)
    return result


def conj_coeffs(a: FloatArray) -> FloatArray:
    out = np.negative(a)
    out[..., 0] = a[..., 0]
    return out


def norm_sq_coeffs(a: FloatArray) -> FloatArray:
    return np.einsum("...i,...i->...", a, a)


def inner_coeffs(a: FloatArray, b: FloatArray) -> FloatArray:
    a, b = np.broadcast_arrays(a, b)
    return np.einsum("...i,...i->...", a, b)


def inverse_coeffs(a: FloatArray) -> FloatArray:
    """conj(a) / |a|^2; the caller guarantees a != 0."""
    return conj_coeffs(a) / norm_sq_coeffs(a)[..., None]


def unit_coeffs(dim: int) -> FloatArray:
    out = np.zeros(dim)
    out[0] = 1.0
    return out


def matmul_coeffs(left: FloatArray, right: FloatArray) -> FloatArray:
    """
    Product of matrices with algebra entries, shapes (..., m, p, d) @ (..., p, n, d).

    Only meaningful as a matrix product for associative algebras; for octonions it is a single
    bracketing of each entry.
    """
    return mul_coeffs(left[..., :, :, None, :], right[..., None, :, :, :]).sum(axis=-3)


def dagger_coeffs(matrix: FloatArray) -> FloatArray:
    """Conjugate transpose of a (..., m, n, d) matrix with algebra entries."""
    return conj_coeffs(np.swapaxes(matrix, -3, -2))
