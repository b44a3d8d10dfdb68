"""Fusion of forward and reverse breakpoint lists."""
from __future__ import annotations

from .core import LengthMismatch, Segmentation


def _pair(fwd: list[int], rev: list[int], gamma_close: float) -> list[int]:
    out = []
    i = j = 0
    while i < len(fwd) and j < len(rev):
        a, b = fwd[i], rev[j]
        if abs(a - b) < gamma_close:
            # skip a partner if the next one on its side is strictly nearer
            if b < a and j + 1 < len(rev) and abs(rev[j + 1] - a) < a - b:
                out.append(b)
                j += 1
                continue
            if a < b and i + 1 < len(fwd) and abs(fwd[i + 1] - b) < b - a:
                out.append(a)
                i += 1
                continue
            out.append((a + b) // 2)  # half-integers round down
            i += 1
            j += 1
        elif a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
    out.extend(fwd[i:])
    out.extend(rev[j:])
    return sorted(set(out))


def prune(taus: list[int], k_max: int) -> list[int]:
    """Drop the breakpoint closest to its predecessor until at most ``k_max`` remain.

    Ties remove the later breakpoint.
    """
    taus = list(taus)
    while len(taus) > k_max:
        gaps = [taus[k] - taus[k - 1] for k in range(1, len(taus))]
        smallest = min(gaps)
        last = max(k for k, g in enumerate(gaps, start=1) if g == smallest)
        del taus[last]
    return taus


def merge(fwd: Segmentation, rev: Segmentation, gamma_close: float, k_max: int) -> Segmentation:
    """Average near-coincident forward/reverse breakpoints and cap the count at ``k_max``.

    Pairs closer than ``gamma_close`` are replaced by their (floored) mean,
    everything else is kept as is.
    """
    if fwd.series_length != rev.series_length:
        raise LengthMismatch(f"series lengths differ: {fwd.series_length} vs {rev.series_length}")
    taus = _pair(list(fwd.breakpoints), list(rev.breakpoints), gamma_close)
    taus = prune(taus, k_max)
    return Segmentation(tuple(taus), fwd.series_length, "merged")
