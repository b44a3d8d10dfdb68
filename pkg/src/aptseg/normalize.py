"""Positivity shift and the plateau pre-filter / reinsertion pair."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LengthMismatch, NonFinite, EmptySeries


@dataclass(frozen=True, eq=False)
class NormalizedChannel:
    values: np.ndarray
    offset: float

    @property
    def raw(self) -> np.ndarray:
        return self.values - self.offset


@dataclass(frozen=True, eq=False)
class PlateauMask:
    kept_indices: np.ndarray
    full_length: int

    @property
    def reduced_length(self) -> int:
        return int(self.kept_indices.size)

    @property
    def removed(self) -> int:
        return self.full_length - self.reduced_length


def normalize_channel(raw) -> NormalizedChannel:
    """Shift a channel by ``|min| + 1`` so every value is at least 1.

    The shift is applied even to channels that are already positive.
    """
    x = np.asarray(raw, dtype=np.float64)
    if x.size == 0:
        raise EmptySeries("cannot normalize an empty channel")
    if not np.all(np.isfinite(x)):
        raise NonFinite("cannot normalize non-finite values")
    offset = abs(float(x.min())) + 1.0
    return NormalizedChannel(x + offset, offset)


def plateau_filter(norm, gamma_plat: float):
    """Drop quasi-constant stretches before trading.

    An index survives if its value differs from the last *kept* value by more
    than ``gamma_plat`` in absolute terms; index 0 always survives.

    Returns ``(reduced_values, PlateauMask)``.
    """
    x = norm.values if isinstance(norm, NormalizedChannel) else np.asarray(norm, dtype=np.float64)
    if gamma_plat < 0:
        raise ValueError("gamma_plat must be nonnegative")
    kept = [0]
    last = x[0]
    for t in range(1, x.size):
        v = x[t]
        if abs(v - last) > gamma_plat:
            kept.append(t)
            last = v
    idx = np.asarray(kept, dtype=np.intp)
    return x[idx], PlateauMask(idx, int(x.size))


def plateau_reinsert(signal, mask: PlateauMask, full_length: int | None = None) -> np.ndarray:
    """Expand a signal on the reduced grid back to the full index range.

    Removed indices copy the value of the nearest preceding kept index.
    """
    sig = np.asarray(signal)
    n = mask.full_length if full_length is None else int(full_length)
    if sig.size != mask.reduced_length:
        raise LengthMismatch(f"signal has {sig.size} points, mask keeps {mask.reduced_length}")
    if n != mask.full_length:
        raise LengthMismatch(f"mask was built for length {mask.full_length}, not {n}")
    # position of the last kept index at or before each t
    owner = np.searchsorted(mask.kept_indices, np.arange(n), side="right") - 1
    return sig[owner]
