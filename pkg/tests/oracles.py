"""Independent reference computations used by the tests.

Nothing here imports the package's algorithms; each oracle recomputes its
quantity by brute force or through numpy's own linear algebra.
"""
import itertools
from fractions import Fraction

import numpy as np


def brute_force_trade(prices, eps):
    """Best terminal wealth over every control sequence, and one maximizing position path.

    All 2^T sequences are simulated at once; the arithmetic per step mirrors
    the wealth dynamics (buy: c*(1-eps)/x_t, sell: n*x_t*(1-eps)).
    """
    x = np.asarray(prices, dtype=np.float64)
    T = x.size - 1
    keep = 1.0 - eps
    codes = np.arange(2 ** T, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(T)[None, :]) & 1).astype(bool)  # True -> hold stock at t+1
    c = np.full(codes.size, x[0] / keep)
    n = np.zeros(codes.size)
    in_stock = np.zeros(codes.size, dtype=bool)
    for t in range(T):
        u = bits[:, t]
        buy = ~in_stock & u
        sell = in_stock & ~u
        n_new = np.where(buy, c * keep / x[t], n)
        c_new = np.where(sell, n * x[t] * keep, c)
        n = np.where(u, n_new, 0.0)
        c = np.where(u, 0.0, c_new)
        in_stock = u
    wealth = np.where(in_stock, n * x[T], c)
    best = int(np.argmax(wealth))
    path = np.concatenate(([-1], np.where(bits[best], 1, -1)))
    return float(wealth[best]), path


def det_cofactor(M):
    M = [list(map(Fraction, row)) for row in M]

    def det(A):
        if len(A) == 1:
            return A[0][0]
        total = Fraction(0)
        for j, a in enumerate(A[0]):
            if a == 0:
                continue
            minor = [row[:j] + row[j + 1:] for row in A[1:]]
            total += (-1) ** j * a * det(minor)
        return total

    return det(M)


def inverse_trace_adjugate(M):
    """trace(M^-1) = sum_i cofactor_ii / det(M), in exact rational arithmetic."""
    n = len(M)
    d = det_cofactor(M)
    tr = Fraction(0)
    for i in range(n):
        minor = [[M[r][c] for c in range(n) if c != i] for r in range(n) if r != i]
        tr += det_cofactor(minor) if minor else Fraction(1)
    return tr / d


def ggs_segment_objective(X, a, b, lam):
    """Regularized Gaussian log-likelihood of rows a..b-1 of X via numpy.linalg."""
    seg = X[a:b]
    m = seg.shape[0]
    mu = seg.mean(axis=0)
    D = seg - mu
    S = D.T @ D / m
    A = S + lam * np.eye(X.shape[1]) / m
    sign, logdet = np.linalg.slogdet(A)
    assert sign > 0
    return -0.5 * m * logdet - lam * np.trace(np.linalg.inv(A))


def ggs_total_objective(X, breakpoints, lam):
    edges = [0, *breakpoints, X.shape[0]]
    return sum(ggs_segment_objective(X, a, b, lam) for a, b in zip(edges[:-1], edges[1:]))


def lstsq_sse(window):
    W = np.atleast_2d(np.asarray(window, dtype=np.float64))
    t = np.arange(W.shape[1], dtype=np.float64)
    A = np.column_stack([t, np.ones_like(t)])
    total = 0.0
    for y in W:
        coef, *_ = np.linalg.lstsq(A, y, rcond=None)
        total += float(((A @ coef - y) ** 2).sum())
    return total


def all_paths(T):
    return itertools.product((-1, 1), repeat=T)
