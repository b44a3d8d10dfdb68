"""Shared data types for the segmentation toolkit.

All series are stored as float64 arrays of shape ``(n_x, T + 1)``. Indices are
pure ordinals; any timestamps read from files travel along as metadata only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np


class SegmentationError(ValueError):
    """Base class for all errors raised by this package."""


class EmptySeries(SegmentationError):
    pass


class RaggedChannels(SegmentationError):
    pass


class NonFinite(SegmentationError):
    pass


class LengthMismatch(SegmentationError):
    pass


class ConfigError(SegmentationError):
    pass


class WeightMismatch(SegmentationError):
    pass


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MultiSeries:
    """Ordered multivariate series with ``n_x`` channels of ``T + 1`` points."""

    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64, copy=True)
        if arr.ndim == 1:
            arr = arr[None, :]
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 2:
            raise EmptySeries(f"need at least one channel of two points, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NonFinite("series contains NaN or Inf")
        object.__setattr__(self, "values", _frozen(arr))

    @property
    def n_x(self) -> int:
        return self.values.shape[0]

    @property
    def T(self) -> int:
        return self.values.shape[1] - 1

    def channel(self, i: int) -> np.ndarray:
        return self.values[i]

    def reversed(self) -> "MultiSeries":
        return MultiSeries(self.values[:, ::-1], dict(self.metadata))

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(np.array_equal(self.values, other.values))

    def __repr__(self):
        return f"MultiSeries(n_x={self.n_x}, T={self.T})"


def validate_series(raw: Sequence[Sequence[float]], metadata: Optional[dict] = None) -> MultiSeries:
    """Check a list of channels and wrap it as a :class:`MultiSeries`.

    Raises EmptySeries, RaggedChannels or NonFinite. The input is copied,
    never modified.
    """
    if isinstance(raw, np.ndarray):
        if raw.ndim == 1:
            raw = raw[None, :]
        channels = [np.asarray(c, dtype=np.float64) for c in raw]
    else:
        if raw is None or len(raw) == 0:
            raise EmptySeries("no channels given")
        channels = [np.asarray(list(c), dtype=np.float64) for c in raw]
    if len(channels) == 0:
        raise EmptySeries("no channels given")
    lengths = {len(c) for c in channels}
    if len(lengths) != 1:
        raise RaggedChannels(f"channels have unequal lengths {sorted(lengths)}")
    if lengths.pop() < 2:
        raise EmptySeries("each channel needs at least 2 points")
    for i, c in enumerate(channels):
        if not np.all(np.isfinite(c)):
            raise NonFinite(f"channel {i} contains NaN or Inf")
    return MultiSeries(np.vstack(channels), dict(metadata or {}))


@dataclass(frozen=True)
class AptsConfig:
    """Hyperparameters of the trading-inspired segmentation.

    ``gamma_close=None`` means ``max(0.01 * T, 2)``, resolved per series.
    ``weights=None`` means uniform weights ``1 / n_x``.
    """

    eps_min: float = 0.01
    eps_max: float = 1.0
    gamma_mult: float = 2.0
    gamma_close: Optional[float] = None
    gamma_plat: float = 0.0
    k_max: int = 10
    weights: Optional[tuple] = None

    def __post_init__(self):
        if not (self.eps_min > 0) or self.eps_min >= self.eps_max:
            raise ConfigError(f"need 0 < eps_min < eps_max, got {self.eps_min}, {self.eps_max}")
        if not self.gamma_mult > 1:
            raise ConfigError("gamma_mult must exceed 1")
        if self.gamma_close is not None and self.gamma_close < 0:
            raise ConfigError("gamma_close must be nonnegative")
        if self.gamma_plat < 0:
            raise ConfigError("gamma_plat must be nonnegative")
        if int(self.k_max) != self.k_max or self.k_max < 1:
            raise ConfigError("k_max must be a positive integer")
        if self.weights is not None:
            w = tuple(float(v) for v in self.weights)
            if any(not (0.0 <= v <= 1.0) for v in w):
                raise ConfigError("weights must lie in [0, 1]")
            if abs(math.fsum(w) - 1.0) > 1e-9:
                raise ConfigError(f"weights must sum to 1, got {math.fsum(w)}")
            object.__setattr__(self, "weights", w)

    def close_threshold(self, T: int) -> float:
        if self.gamma_close is not None:
            return float(self.gamma_close)
        return max(0.01 * T, 2.0)

    def weight_vector(self, n_x: int) -> np.ndarray:
        if self.weights is None:
            return np.full(n_x, 1.0 / n_x)
        if len(self.weights) != n_x:
            raise WeightMismatch(f"{len(self.weights)} weights for {n_x} channels")
        return np.asarray(self.weights, dtype=np.float64)

    def as_dict(self) -> dict[str, Any]:
        return {
            "eps_min": self.eps_min,
            "eps_max": self.eps_max,
            "gamma_mult": self.gamma_mult,
            "gamma_close": self.gamma_close,
            "gamma_plat": self.gamma_plat,
            "k_max": self.k_max,
            "weights": list(self.weights) if self.weights is not None else None,
        }


def count_switches(values: np.ndarray) -> int:
    values = np.asarray(values)
    return int(np.count_nonzero(values[1:] != values[:-1]))


@dataclass(frozen=True, eq=False)
class SwitchSignal:
    """Optimal cash/stock position sequence of one channel (-1 cash, +1 stock).

    ``iterations`` is the number of transaction-cost rounds spent finding it;
    ``degenerate`` marks channels where no profitable trade exists at all.
    """

    values: np.ndarray
    epsilon_used: float = 0.0
    degenerate: bool = False
    iterations: int = 0

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.int8, copy=True)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("switch signal must be a nonempty 1-d sequence")
        if not np.all((arr == 1) | (arr == -1)):
            raise ValueError("switch signal values must be -1 or +1")
        if arr[0] != -1:
            raise ValueError("switch signal must start in cash (-1)")
        if self.epsilon_used < 0:
            raise ValueError("epsilon_used must be nonnegative")
        object.__setattr__(self, "values", _frozen(arr))

    @property
    def switch_count(self) -> int:
        return count_switches(self.values)

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, SwitchSignal):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values)) and self.epsilon_used == other.epsilon_used


SOURCES = ("forward", "reverse", "merged", "bu", "ggs")


@dataclass(frozen=True)
class Segmentation:
    """Strictly increasing breakpoints ``0 < tau_1 < ... < tau_K < T``."""

    breakpoints: tuple
    series_length: int
    source: str = "merged"

    def __post_init__(self):
        bps = tuple(int(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        T = self.series_length
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise ValueError(f"breakpoints not strictly increasing: {bps}")
        if bps and not (0 < bps[0] and bps[-1] < T):
            raise ValueError(f"breakpoints must lie strictly inside (0, {T}): {bps}")

    @property
    def k(self) -> int:
        return len(self.breakpoints)

    def __iter__(self):
        return iter(self.breakpoints)

    def __len__(self):
        return len(self.breakpoints)
