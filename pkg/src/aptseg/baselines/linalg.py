"""Small dense symmetric positive definite kernels.

Everything works on a single ``(n, n)`` matrix or a stack ``(m, n, n)``;
the column loop is in Python, the stack dimension is vectorized.
"""
from __future__ import annotations

import numpy as np

from ..core import SegmentationError


class NotPositiveDefinite(SegmentationError):
    pass


def cholesky(a) -> np.ndarray:
    """Lower-triangular ``L`` with ``L @ L.T == a`` (left-looking, column by column)."""
    A = np.asarray(a, dtype=np.float64)
    single = A.ndim == 2
    if single:
        A = A[None]
    if A.ndim != 3 or A.shape[-1] != A.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {np.shape(a)}")
    n = A.shape[-1]
    L = np.zeros_like(A)
    for j in range(n):
        # column j below (and on) the diagonal, minus contributions of earlier columns
        col = A[:, j:, j] - np.einsum("mik,mk->mi", L[:, j:, :j], L[:, j, :j])
        pivot = col[:, 0]
        if not np.all(pivot > 0):
            raise NotPositiveDefinite(f"nonpositive pivot {pivot.min():.3g} in column {j}")
        d = np.sqrt(pivot)
        L[:, j, j] = d
        L[:, j + 1:, j] = col[:, 1:] / d[:, None]
    return L[0] if single else L


def logdet_from_cholesky(L) -> np.ndarray:
    return 2.0 * np.log(np.diagonal(L, axis1=-2, axis2=-1)).sum(axis=-1)


def inverse_trace_from_cholesky(L) -> np.ndarray:
    """``tr(A^{-1}) = ||L^{-1}||_F^2``, with ``L^{-1}`` from forward substitution."""
    L = np.asarray(L)
    single = L.ndim == 2
    if single:
        L = L[None]
    m, n, _ = L.shape
    Y = np.zeros_like(L)  # Y = L^{-1}, lower triangular
    for i in range(n):
        rhs = -np.einsum("mk,mkc->mc", L[:, i, :i], Y[:, :i, :])
        rhs[:, i] += 1.0
        Y[:, i, :] = rhs / L[:, i, i][:, None]
    out = np.einsum("mij,mij->m", Y, Y)
    return out[0] if single else out


def logdet_spd(a):
    return logdet_from_cholesky(cholesky(a))


def inverse_trace_spd(a):
    return inverse_trace_from_cholesky(cholesky(a))
