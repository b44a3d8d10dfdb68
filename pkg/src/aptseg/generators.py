"""Synthetic benchmark series."""
from __future__ import annotations

import numpy as np

from .core import MultiSeries

# vertices of the piecewise-affine benchmark, read off its plotted data
EXAMPLE1_VERTICES = (
    (0, 0.0),
    (16, 12.8969696969697),
    (33, -3.4),
    (49, 19.1939393939394),
    (50, 19.3939393939394),
    (66, 3.2),
    (83, 26.2969696969697),
    (99, 19.8),
)

HALF_CIRCLE_RADIUS = 16.5
HALF_CIRCLE_CENTERS = (16.5, 49.5, 82.5)


def example1_values(n: int = 100) -> np.ndarray:
    vt, vx = zip(*EXAMPLE1_VERTICES)
    return np.interp(np.arange(n, dtype=np.float64), vt, vx)


def gen_example1() -> MultiSeries:
    """100-point single channel made of affine pieces with five turning points."""
    return MultiSeries(example1_values(), {"source": "gen:example1"})


def example2_values(n: int = 100) -> np.ndarray:
    t = np.arange(n, dtype=np.float64)
    out = np.zeros(n)
    R = HALF_CIRCLE_RADIUS
    for c in HALF_CIRCLE_CENTERS:
        inside = np.abs(t - c) <= R
        out[inside] = np.maximum(out[inside], np.sqrt(np.maximum(R * R - (t[inside] - c) ** 2, 0.0)))
    return out


def gen_example2() -> MultiSeries:
    """100-point single channel of three adjacent half-circles of radius 16.5."""
    return MultiSeries(example2_values(), {"source": "gen:example2"})


def gen_noisy_replicas(base: MultiSeries, n_x: int, sigma: float, seed: int) -> MultiSeries:
    """``n_x`` copies of a one-channel series, each with independent N(0, sigma^2) noise.

    Draws come from numpy's PCG64 generator (ziggurat normal sampler), so a
    given seed reproduces the same replicas.
    """
    if n_x < 1:
        raise ValueError("n_x must be at least 1")
    if sigma < 0:
        raise ValueError("sigma must be nonnegative")
    x = base.values[0]
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal((n_x, x.size)) * sigma
    meta = dict(base.metadata)
    meta.update(source=f"{base.metadata.get('source', 'series')}+noise", sigma=sigma, seed=seed)
    return MultiSeries(x[None, :] + noise, meta)


def gen_fig1_three_channel() -> MultiSeries:
    """Example 1 and 2 channels plus a sinusoid of period 100/3 and amplitude 20."""
    t = np.arange(100, dtype=np.float64)
    x3 = 20.0 * np.sin(2 * np.pi * 3 * t / 100)
    return MultiSeries(np.vstack([example1_values(), example2_values(), x3]), {"source": "gen:fig1"})


def gen_plateaus(ramp: int = 20, plateau: int = 20, height: float = 10.0, noise: float = 0.01,
                 seed: int = 0, pieces: int = 7) -> tuple[MultiSeries, list[tuple[int, int]]]:
    """Alternating up/down ramps separated by flat stretches with small uniform noise.

    Returns the series and the ``(entry, exit)`` index of every plateau, i.e.
    its first and last flat index.
    """
    rng = np.random.default_rng(seed)
    vals = [0.0]
    plateaus = []
    level = 0.0
    direction = 1.0
    for k in range(pieces):
        if k % 2 == 0:
            step = direction * height / ramp
            for _ in range(ramp):
                level += step
                vals.append(level)
            direction = -direction
        else:
            entry = len(vals) - 1
            for _ in range(plateau):
                vals.append(level + rng.uniform(-noise, noise))
            vals.append(level)
            plateaus.append((entry, len(vals) - 1))
    return MultiSeries(np.asarray(vals), {"source": "gen:plateaus"}), plateaus
