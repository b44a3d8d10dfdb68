"""A-posteriori optimal trading on one normalized channel.

Each channel is treated as a stock price. A virtual portfolio is either fully
in cash (-1) or fully in stock (+1); every switch costs a fraction ``eps`` of
the moved value. With perfect hindsight, the wealth-maximizing sequence of
positions is found by a forward pass that keeps, per time step, only the best
state for each position, followed by backtracking.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AptsConfig, SegmentationError, SwitchSignal, count_switches


class NonPositivePrice(SegmentationError):
    pass


CASH, STOCK = -1, 1


@dataclass(frozen=True)
class TradeState:
    shares: float
    cash: float
    position: int
    wealth: float


def initial_state(price0: float, eps: float) -> TradeState:
    # enough cash to buy exactly one share after costs
    c0 = price0 / (1.0 - eps)
    return TradeState(0.0, c0, CASH, c0)


def step_transitions(state: TradeState, price_t: float, price_next: float, eps: float):
    """Return ``(cash_successor, stock_successor)`` of ``state``."""
    if price_t <= 0 or price_next <= 0:
        raise NonPositivePrice(f"prices must be positive, got {price_t}, {price_next}")
    keep = 1.0 - eps
    if state.position == CASH:
        c = state.cash
        to_cash = TradeState(0.0, c, CASH, c)
        n = c * keep / price_t
        to_stock = TradeState(n, 0.0, STOCK, n * price_next)
    else:
        n = state.shares
        c = n * price_t * keep
        to_cash = TradeState(0.0, c, CASH, c)
        to_stock = TradeState(n, 0.0, STOCK, n * price_next)
    return to_cash, to_stock


def solve_trade(prices, eps: float) -> tuple[np.ndarray, float]:
    """Run the two-state dynamic program.

    Returns the optimal position sequence (int8, starting at -1) and the
    terminal wealth. Ties while pruning keep the parent that does not trade;
    a tie at the horizon resolves to stock.
    """
    x = [float(v) for v in prices]
    T = len(x) - 1
    if T < 1:
        raise SegmentationError("need at least two prices")
    if min(x) <= 0:
        raise NonPositivePrice("prices must be strictly positive")
    if not 0 <= eps < 1:
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    keep = 1.0 - eps

    # parent position of the best cash / stock state at t, for t = 1..T
    from_stock_cash = bytearray(T + 1)   # 1 -> cash state at t came from stock
    from_cash_stock = bytearray(T + 1)   # 1 -> stock state at t came from cash

    cash = x[0] / keep
    shares = cash * keep / x[0]
    from_cash_stock[1] = 1
    for t in range(1, T):
        xt = x[t]
        sell = shares * xt * keep
        buy = cash * keep / xt
        if sell > cash:
            new_cash = sell
            from_stock_cash[t + 1] = 1
        else:
            new_cash = cash
        xn = x[t + 1]
        if buy * xn > shares * xn:
            shares = buy
            from_cash_stock[t + 1] = 1
        cash = new_cash

    w_cash = cash
    w_stock = shares * x[T]
    pos = CASH if w_cash > w_stock else STOCK
    out = np.empty(T + 1, dtype=np.int8)
    for t in range(T, 0, -1):
        out[t] = pos
        if pos == CASH:
            pos = STOCK if from_stock_cash[t] else CASH
        else:
            pos = CASH if from_cash_stock[t] else STOCK
    out[0] = CASH
    return out, max(w_cash, w_stock)


def trade(prices, eps: float) -> SwitchSignal:
    values, _ = solve_trade(prices, eps)
    return SwitchSignal(values, epsilon_used=float(eps))


def epsilon_schedule(eps_prev: float, eps_min: float, eps_max: float, gamma_mult: float, j: int) -> float:
    """Transaction-cost level of iteration ``j``: 0, then eps_min, then geometric growth.

    ``eps_max`` is not applied here; the caller stops before exceeding it.
    """
    if j < 0:
        raise ValueError("iteration index must be nonnegative")
    if j == 0:
        return 0.0
    if j == 1:
        return float(eps_min)
    return gamma_mult * eps_prev


def terminate(signal, k_max: int) -> bool:
    L = signal.switch_count if isinstance(signal, SwitchSignal) else count_switches(signal)
    return 0 < L <= k_max


def channel_search(prices, cfg: AptsConfig) -> SwitchSignal:
    """Raise the transaction cost until the channel switches at most ``k_max`` times.

    If the switch count drops to zero on the way, the last signal with at
    least one switch is returned (it then has more than ``k_max`` switches).
    A constant channel, or one without any profitable trade at zero cost,
    comes back all-cash with ``degenerate=True``.
    """
    x = np.asarray(prices, dtype=np.float64)
    if x.size >= 1 and x.max() == x.min():
        return SwitchSignal(np.full(x.size, CASH), 0.0, degenerate=True, iterations=0)
    eps = 0.0
    fallback = None
    j = 0
    while True:
        eps = epsilon_schedule(eps, cfg.eps_min, cfg.eps_max, cfg.gamma_mult, j)
        values, _ = solve_trade(prices, eps)
        L = count_switches(values)
        if L == 0:
            if fallback is None:
                return SwitchSignal(values, 0.0, degenerate=True, iterations=j + 1)
            return SwitchSignal(fallback[0], fallback[1], iterations=j + 1)
        if L <= cfg.k_max:
            return SwitchSignal(values, eps, iterations=j + 1)
        fallback = (values, eps)
        nxt = epsilon_schedule(eps, cfg.eps_min, cfg.eps_max, cfg.gamma_mult, j + 1)
        if nxt > cfg.eps_max or nxt >= 1.0:
            return SwitchSignal(values, eps, iterations=j + 1)
        j += 1
