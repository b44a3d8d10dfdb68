"""Consensus over channels: sign alignment, weighted average, zero crossings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Segmentation, WeightMismatch, LengthMismatch


@dataclass(frozen=True, eq=False)
class ConsensusTrace:
    q: np.ndarray
    p: np.ndarray


def _as_matrix(signals) -> np.ndarray:
    rows = [np.asarray(getattr(s, "values", s), dtype=np.float64) for s in signals]
    if not rows:
        raise ValueError("need at least one signal")
    if len({r.size for r in rows}) != 1:
        raise LengthMismatch("signals differ in length")
    return np.vstack(rows)


def align_signs(signals) -> np.ndarray:
    """Flip channels that move against channel 0.

    Channel 0 is the reference (+1). Every other channel gets the sign that
    maximizes ``sum_t |b_0(t) + p * b_i(t)|``; ties keep +1.
    """
    B = _as_matrix(signals)
    ref = B[0]
    p = np.ones(B.shape[0], dtype=np.int8)
    for i in range(1, B.shape[0]):
        plus = np.abs(ref + B[i]).sum()
        minus = np.abs(ref - B[i]).sum()
        if minus > plus:
            p[i] = -1
    return p


def consensus(signals, weights: Sequence[float] | None = None) -> ConsensusTrace:
    B = _as_matrix(signals)
    n_x = B.shape[0]
    if weights is None:
        w = np.full(n_x, 1.0 / n_x)
    else:
        w = np.asarray(weights, dtype=np.float64)
        if w.size != n_x:
            raise WeightMismatch(f"{w.size} weights for {n_x} channels")
    p = align_signs(B)
    q = (w * p) @ B
    np.clip(q, -1.0, 1.0, out=q)
    return ConsensusTrace(q, p)


def crossing_indices(q, skip_first: bool = False, skip_last: bool = False) -> list[int]:
    """Indices ``t >= 1`` where the sign of ``q`` changes.

    Zero values inherit the previous sign (a leading zero counts as negative),
    so an exact zero never produces two crossings. ``skip_first`` ignores the
    sample at index 0 (the first nonzero sign after it seeds the state);
    ``skip_last`` ignores the final sample.
    """
    q = np.asarray(q, dtype=np.float64)
    if skip_last:
        q = q[:-1]
    if q.size == 0:
        return []
    start = 1 if skip_first else 0
    nz = np.flatnonzero(q[start:])
    sign = np.sign(q[start + nz[0]]) if (skip_first and nz.size) else (np.sign(q[0]) or -1.0)
    out = []
    for t in range(start, q.size):
        s = np.sign(q[t])
        if s != 0 and s != sign:
            out.append(t)
            sign = s
    return out


def crossings(trace, series_length: int | None = None, source: str = "forward",
              skip_first: bool = False, skip_last: bool = False) -> Segmentation:
    """Zero crossings of a consensus trace as a :class:`Segmentation`.

    A crossing at the very last index cannot start a segment and is dropped.
    """
    q = trace.q if isinstance(trace, ConsensusTrace) else np.asarray(trace)
    T = q.size - 1 if series_length is None else series_length
    taus = [t for t in crossing_indices(q, skip_first, skip_last) if 0 < t < T]
    return Segmentation(tuple(taus), T, source)
