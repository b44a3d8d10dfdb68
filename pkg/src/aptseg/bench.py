"""Timing harness: repeated solves and channel-count scaling tables."""
from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .core import AptsConfig, MultiSeries
from .generators import gen_noisy_replicas

ALGOS = ("apts", "bu", "ggs")


@dataclass
class Timing:
    seconds: list

    @property
    def min(self) -> float:
        return min(self.seconds)

    @property
    def median(self) -> float:
        return statistics.median(self.seconds)


def time_call(fn, repeat: int = 1) -> tuple[object, Timing]:
    out = None
    secs = []
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        out = fn()
        secs.append(time.perf_counter() - t0)
    return out, Timing(secs)


def solver(algo: str, series: MultiSeries, *, cfg: AptsConfig | None = None, k: int = 5,
           lam: float = 0.1, workers: int = 1):
    """Zero-argument callable running ``algo`` on ``series``."""
    from .baselines import bu_segment, ggs_segment
    from .pipeline import apts

    if algo == "apts":
        return lambda: apts(series, cfg, workers=workers)
    if algo == "bu":
        return lambda: bu_segment(series, k)
    if algo == "ggs":
        return lambda: ggs_segment(series, k, lam)
    raise ValueError(f"unknown algorithm {algo!r}")


def stretch(series: MultiSeries, n_points: int) -> MultiSeries:
    """Linearly resample a series onto ``n_points`` evenly spaced positions."""
    old = np.arange(series.T + 1, dtype=np.float64)
    new = np.linspace(0.0, series.T, n_points)
    vals = np.vstack([np.interp(new, old, ch) for ch in series.values])
    return MultiSeries(vals, dict(series.metadata))


def bench_scaling(base: MultiSeries, channel_counts, algos=("apts", "ggs"), *, sigma: float = 0.2,
                  seed: int = 0, repeat: int = 3, k: int = 5, lam: float = 0.1,
                  cfg: AptsConfig | None = None) -> list[dict]:
    """Time each algorithm for every channel count at fixed length.

    Channels are taken from ``base`` if it has enough of them, otherwise noisy
    replicas of its first channel are generated. Returns one row per
    ``(n_x, algo)`` with the minimum over ``repeat`` runs.
    """
    rows = []
    for n in channel_counts:
        if base.n_x >= n:
            data = MultiSeries(base.values[:n], dict(base.metadata))
        else:
            data = gen_noisy_replicas(MultiSeries(base.values[:1]), n, sigma, seed)
        row = {"n_x": n, "T": data.T}
        for algo in algos:
            _, timing = time_call(solver(algo, data, cfg=cfg, k=k, lam=lam), repeat)
            row[algo] = timing.min
        rows.append(row)
    return rows


def format_table(rows: list[dict], algos) -> str:
    head = "n_x\tT\t" + "\t".join(f"{a}_seconds" for a in algos)
    body = ["\t".join([str(r["n_x"]), str(r["T"])] + [f"{r[a]:.6f}" for a in algos]) for r in rows]
    return "\n".join([head, *body]) + "\n"
