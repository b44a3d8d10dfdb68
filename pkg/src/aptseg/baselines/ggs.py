"""Greedy Gaussian segmentation.

Each segment is modeled as a Gaussian with its own mean and covariance. The
covariance-regularized log-likelihood of a segment of length ``m`` with
empirical covariance ``S`` is::

    -m/2 * logdet(S + lam*I/m) - lam * tr((S + lam*I/m)^-1)

Breakpoints are inserted one at a time at the position of largest gain, and
after every insertion all breakpoints are moved one by one to their best
position between their neighbours until no move improves the total.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..core import MultiSeries, Segmentation, SegmentationError
from .linalg import cholesky, inverse_trace_from_cholesky, logdet_from_cholesky

log = logging.getLogger(__name__)

DEFAULT_LAMBDA = 0.1


class SingularModel(SegmentationError):
    pass


@dataclass
class GgsModel:
    """Per-segment moments of a fitted segmentation."""

    lam: float
    k_target: int
    breakpoints: tuple = ()
    means: list = field(default_factory=list)
    covariances: list = field(default_factory=list)
    objective: float = float("nan")
    history: list = field(default_factory=list)


class _Stats:
    def __init__(self, X: np.ndarray, lam: float):
        # X is (N, n_x): one row per index
        N, n = X.shape
        self.n = n
        self.lam = lam
        # center first to limit cancellation in the running second moments
        X = X - X.mean(axis=0)
        self.S1 = np.concatenate((np.zeros((1, n)), np.cumsum(X, axis=0)))
        outer = X[:, :, None] * X[:, None, :]
        self.S2 = np.concatenate((np.zeros((1, n, n)), np.cumsum(outer, axis=0)))

    def objective(self, a, b) -> np.ndarray:
        """Log-likelihood of segments ``a..b-1`` (broadcast over index arrays)."""
        a = np.atleast_1d(np.asarray(a, dtype=np.intp))
        b = np.atleast_1d(np.asarray(b, dtype=np.intp))
        a, b = np.broadcast_arrays(a, b)
        m = (b - a).astype(np.float64)
        mu = (self.S1[b] - self.S1[a]) / m[:, None]
        S = (self.S2[b] - self.S2[a]) / m[:, None, None] - mu[:, :, None] * mu[:, None, :]
        S = 0.5 * (S + np.swapaxes(S, 1, 2))
        A = S + (self.lam / m)[:, None, None] * np.eye(self.n)
        L = cholesky(A)
        return -0.5 * m * logdet_from_cholesky(L) - self.lam * inverse_trace_from_cholesky(L)


def ggs_objective(series: MultiSeries, breakpoints, lam: float = DEFAULT_LAMBDA) -> float:
    """Total regularized log-likelihood of the segmentation given by ``breakpoints``."""
    st = _Stats(series.values.T, lam)
    edges = [0, *breakpoints, series.T + 1]
    return float(st.objective(edges[:-1], edges[1:]).sum())


def _best_split(st: _Stats, a: int, b: int):
    """Best single split ``t`` of ``a..b-1``; returns ``(value, t)`` or ``None``."""
    if b - a < 2:
        return None
    ts = np.arange(a + 1, b)
    vals = st.objective(a, ts) + st.objective(ts, b)
    k = int(np.argmax(vals))
    return float(vals[k]), int(ts[k])


def _adjust(st: _Stats, taus: list[int], N: int, max_sweeps: int = 1000) -> int:
    sweeps = 0
    while sweeps < max_sweeps:
        sweeps += 1
        moved = False
        for k in range(len(taus)):
            lo = taus[k - 1] if k > 0 else 0
            hi = taus[k + 1] if k + 1 < len(taus) else N
            current = float((st.objective(lo, taus[k]) + st.objective(taus[k], hi))[0])
            best = _best_split(st, lo, hi)
            if best is not None and best[0] > current and best[1] != taus[k]:
                taus[k] = best[1]
                moved = True
        if not moved:
            break
    return sweeps


def ggs_segment(series: MultiSeries, k_target: int, lam: float = DEFAULT_LAMBDA,
                model: GgsModel | None = None) -> Segmentation:
    """Insert ``k_target`` breakpoints greedily, re-adjusting all of them after each insertion.

    Pass a :class:`GgsModel` as ``model`` to receive the objective trace
    (after every insertion and every adjustment) and the fitted moments.
    """
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if k_target < 1:
        raise ValueError("k_target must be at least 1")
    N = series.T + 1
    if k_target > N - 1:
        raise SegmentationError(f"cannot place {k_target} breakpoints in {N} points")
    st = _Stats(series.values.T, lam)
    taus: list[int] = []
    history = []

    def total():
        edges = [0, *taus, N]
        return float(st.objective(edges[:-1], edges[1:]).sum())

    history.append(("start", total()))
    for _ in range(k_target):
        edges = [0, *taus, N]
        best = None
        for a, b in zip(edges[:-1], edges[1:]):
            cand = _best_split(st, a, b)
            if cand is None:
                continue
            gain = cand[0] - float(st.objective(a, b)[0])
            if best is None or gain > best[0]:
                best = (gain, cand[1])
        if best is None:
            break
        taus = sorted(taus + [best[1]])
        history.append(("insert", total()))
        _adjust(st, taus, N)
        history.append(("adjust", total()))
    obj = total()
    if not np.isfinite(obj):
        raise SingularModel("objective is not finite")
    if model is not None:
        model.lam, model.k_target = lam, k_target
        model.breakpoints = tuple(taus)
        edges = [0, *taus, N]
        X = series.values.T
        model.means = [X[a:b].mean(axis=0) for a, b in zip(edges[:-1], edges[1:])]
        model.covariances = [np.cov(X[a:b].T, bias=True).reshape(series.n_x, series.n_x)
                             for a, b in zip(edges[:-1], edges[1:])]
        model.objective = obj
        model.history = history
    return Segmentation(tuple(taus), series.T, "ggs")
