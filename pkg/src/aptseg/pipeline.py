"""End-to-end trading-inspired segmentation (forward pass, reverse pass, merge)."""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .consensus import ConsensusTrace, consensus, crossings
from .core import AptsConfig, MultiSeries, Segmentation, SwitchSignal, count_switches
from .merge import merge
from .normalize import normalize_channel, plateau_filter, plateau_reinsert
from .trading import channel_search, solve_trade

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AptsResult:
    segmentation: Segmentation
    forward: Segmentation
    reverse: Segmentation
    forward_signals: tuple
    reverse_signals: tuple
    forward_trace: ConsensusTrace
    reverse_trace: ConsensusTrace
    seconds: float = 0.0
    degenerate: bool = False
    timing: dict = field(default_factory=dict)

    @property
    def breakpoints(self) -> tuple:
        return self.segmentation.breakpoints

    @property
    def epsilons(self) -> list[float]:
        return [s.epsilon_used for s in self.forward_signals]

    @property
    def reverse_signals_forward(self) -> list[np.ndarray]:
        """Reverse-pass signals in forward indexing (they end, rather than start, in cash)."""
        return [reverse_index_map(s) for s in self.reverse_signals]

    @property
    def reverse_iterations(self) -> list[int]:
        return [s.iterations for s in self.reverse_signals]


def reverse_index_map(signal) -> np.ndarray:
    """Map a signal computed on the reversed series back to forward indexing."""
    return np.asarray(getattr(signal, "values", signal))[::-1].copy()


def _reduce(raw: np.ndarray, gamma_plat: float, plateau: bool):
    prices = normalize_channel(raw).values
    if not plateau:
        return prices, None
    return plateau_filter(prices, gamma_plat)


def _expand(values: np.ndarray, mask) -> np.ndarray:
    return values if mask is None else plateau_reinsert(values, mask)


def _forward_channel(raw: np.ndarray, cfg: AptsConfig, plateau: bool) -> SwitchSignal:
    prices, mask = _reduce(raw, cfg.gamma_plat, plateau)
    if prices.size < 2:
        return SwitchSignal(np.full(raw.size, -1), 0.0, degenerate=True, iterations=0)
    sig = channel_search(prices, cfg)
    return SwitchSignal(_expand(sig.values, mask), sig.epsilon_used, sig.degenerate, sig.iterations)


def _reverse_channel(raw_reversed: np.ndarray, eps: float, gamma_plat: float, plateau: bool) -> SwitchSignal:
    # eps is frozen from the forward pass: no search here
    prices, mask = _reduce(raw_reversed, gamma_plat, plateau)
    if prices.size < 2:
        values = np.full(raw_reversed.size, -1, dtype=np.int8)
    else:
        values, _ = solve_trade(prices, eps)
        values = _expand(values, mask)
    return SwitchSignal(values, eps, degenerate=count_switches(values) == 0, iterations=0)


def _map(fn, args_list, workers: int):
    if workers <= 1 or len(args_list) <= 1:
        return [fn(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*args_list)))


def apts(series: MultiSeries, cfg: AptsConfig | None = None, *, plateau: bool | None = None,
         workers: int = 1) -> AptsResult:
    """Segment ``series`` and return breakpoints plus all intermediate signals.

    ``plateau`` forces the plateau filter on or off; by default it runs only
    when ``cfg.gamma_plat > 0``. ``workers > 1`` spreads the per-channel
    work over processes.
    """
    cfg = cfg or AptsConfig()
    if plateau is None:
        plateau = cfg.gamma_plat > 0
    T = series.T
    weights = cfg.weight_vector(series.n_x)
    t0 = time.perf_counter()

    fwd_signals = _map(_forward_channel,
                       [(series.values[i], cfg, plateau) for i in range(series.n_x)], workers)
    t1 = time.perf_counter()
    fwd_trace = consensus(fwd_signals, weights)
    # b(0) = -1 is fixed by the initial cash position, so it carries no trend
    fwd = crossings(fwd_trace, T, "forward", skip_first=True)

    flipped = series.values[:, ::-1]
    rev_signals = _map(_reverse_channel,
                       [(flipped[i], fwd_signals[i].epsilon_used, cfg.gamma_plat, plateau)
                        for i in range(series.n_x)], workers)
    t2 = time.perf_counter()
    rev_trace = consensus([reverse_index_map(s) for s in rev_signals], weights)
    # in forward indexing the reverse pass starts in cash at t = T
    rev = crossings(rev_trace, T, "reverse", skip_last=True)

    merged = merge(fwd, rev, cfg.close_threshold(T), cfg.k_max)
    degenerate = all(s.degenerate for s in fwd_signals)
    if degenerate:
        log.warning("all channels are degenerate; returning an empty segmentation")
        merged = Segmentation((), T, "merged")
    t3 = time.perf_counter()
    return AptsResult(
        segmentation=merged,
        forward=fwd,
        reverse=rev,
        forward_signals=tuple(fwd_signals),
        reverse_signals=tuple(rev_signals),
        forward_trace=fwd_trace,
        reverse_trace=rev_trace,
        seconds=t3 - t0,
        degenerate=degenerate,
        timing={"forward": t1 - t0, "reverse": t2 - t1, "merge": t3 - t2},
    )
