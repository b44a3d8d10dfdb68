"""Bottom-up piecewise-affine segmentation.

Starts with every index as its own segment and repeatedly merges the adjacent
pair whose union has the smallest least-squares affine residual (summed over
channels) until the requested number of breakpoints is left.
"""
from __future__ import annotations

import numpy as np

from ..core import MultiSeries, Segmentation, SegmentationError


class TooShort(SegmentationError):
    pass


def affine_fit_sse(window) -> float:
    """Summed squared residual of per-channel least-squares lines on abscissa 0..m-1."""
    W = np.atleast_2d(np.asarray(window, dtype=np.float64))
    m = W.shape[1]
    if m < 2:
        raise ValueError("affine fit needs at least two points")
    t = np.arange(m, dtype=np.float64)
    tc = t - t.mean()
    Wc = W - W.mean(axis=1, keepdims=True)
    slope = Wc @ tc / (tc @ tc)
    resid = Wc - slope[:, None] * tc[None, :]
    return float((resid ** 2).sum())


class _Moments:
    """Prefix sums that give the affine SSE of any index range in O(n_x)."""

    def __init__(self, X: np.ndarray):
        n_x, N = X.shape
        t = np.arange(N, dtype=np.float64)
        z = np.zeros((n_x, 1))
        self.St = np.concatenate(([0.0], np.cumsum(t)))
        self.Stt = np.concatenate(([0.0], np.cumsum(t * t)))
        self.Sx = np.concatenate((z, np.cumsum(X, axis=1)), axis=1)
        self.Sxx = np.concatenate((z, np.cumsum(X * X, axis=1)), axis=1)
        self.Stx = np.concatenate((z, np.cumsum(X * t, axis=1)), axis=1)

    def sse(self, a: int, b: int) -> float:
        """Cost of the segment covering indices ``a..b-1``."""
        m = b - a
        if m < 3:
            return 0.0
        st = self.St[b] - self.St[a]
        stt = self.Stt[b] - self.Stt[a] - st * st / m
        sx = self.Sx[:, b] - self.Sx[:, a]
        sxx = self.Sxx[:, b] - self.Sxx[:, a] - sx * sx / m
        stx = self.Stx[:, b] - self.Stx[:, a] - st * sx / m
        return float(np.maximum(sxx - stx * stx / stt, 0.0).sum())


def bu_segment(series: MultiSeries, k_target: int) -> Segmentation:
    N = series.T + 1
    if k_target < 0:
        raise ValueError("k_target must be nonnegative")
    if N < 2 * (k_target + 1):
        raise TooShort(f"{N} points cannot hold {k_target + 1} segments of length >= 2")
    mom = _Moments(series.values)
    starts = list(range(N))           # segment i covers starts[i] .. starts[i+1]-1
    ends = starts[1:] + [N]
    cost = [mom.sse(starts[i], ends[i + 1]) for i in range(N - 1)]  # cost of merging i, i+1
    while len(starts) - 1 > k_target:
        i = int(np.argmin(cost))
        ends[i] = ends[i + 1]
        del starts[i + 1], ends[i + 1], cost[i]
        if i < len(cost):
            cost[i] = mom.sse(starts[i], ends[i + 1])
        if i > 0:
            cost[i - 1] = mom.sse(starts[i - 1], ends[i])
    return Segmentation(tuple(starts[1:]), series.T, "bu")
