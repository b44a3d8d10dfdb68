"""Exit criteria. Each test logs one PASS/FAIL line shown in the terminal summary."""
import time

import numpy as np
import pytest

from aptseg.baselines import bu_segment, ggs_objective, ggs_segment
from aptseg.bench import solver, stretch, time_call
from aptseg.core import AptsConfig, MultiSeries, count_switches
from aptseg.generators import gen_example1, gen_example2, gen_noisy_replicas, gen_plateaus
from aptseg.pipeline import apts
from aptseg.trading import solve_trade
from oracles import brute_force_trade

DEFAULT_SCHEDULE = [0.0] + [0.01 * 2 ** k for k in range(7)]  # 0, 0.01, ..., 0.64


def within(found, expected, tol):
    return len(found) == len(expected) and all(abs(a - b) <= tol for a, b in zip(found, expected))


def test_01_example1_reproduction(record):
    s = gen_example1()
    apts(s)  # warm-up
    _, timing = time_call(lambda: apts(s, workers=1), repeat=5)
    r = apts(s)
    ok = within(r.breakpoints, (16, 33, 50, 66, 83), 1) and timing.min < 0.1
    record("1 example1 apts", ok, f"tau={r.breakpoints} t_min={timing.min:.4f}s (<0.1)")
    assert ok


def test_02_example2_reproduction(record):
    r = apts(gen_example2())
    ok = within(r.breakpoints, (16, 33, 49, 66, 82), 1)
    record("2 example2 apts", ok, f"tau={r.breakpoints} vs (16,33,49,66,82) +-1")
    assert ok


def test_03_bu_reproduction(record):
    out = bu_segment(gen_example1(), 5).breakpoints
    ok = within(out, (17, 33, 50, 66, 83), 2)
    record("3 bu example1", ok, f"tau={out} vs (17,33,50,66,83) +-2")
    assert ok


def test_04_ggs_objective(record):
    s = gen_example1()
    out = ggs_segment(s, 5, 0.1).breakpoints
    got, ref = ggs_objective(s, out, 0.1), ggs_objective(s, (8, 25, 40, 79, 93), 0.1)
    ok = len(out) == 5 and got >= ref
    record("4 ggs objective", ok, f"tau={out} obj={got:.4f} >= ref {ref:.4f}")
    assert ok


def test_05_dp_optimality(record):
    rng = np.random.default_rng(2024)
    mismatches = 0
    t0 = time.perf_counter()
    for k in range(200):
        T = int(rng.integers(1, 13))
        if k % 3 == 0:
            # few distinct levels: many exact ties
            prices = rng.integers(1, 4, T + 1).astype(float)
        else:
            prices = rng.uniform(0.5, 10.0, T + 1)
        for eps in (0.0, 0.01, 0.1, 0.5):
            _, w = solve_trade(prices, eps)
            if w != brute_force_trade(prices, eps)[0]:
                mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 10
    record("5 dp optimality", ok, f"mismatches={mismatches}/800 in {elapsed:.2f}s (<10s)")
    assert ok


def test_06_switch_count_monotone(record):
    rng = np.random.default_rng(6)
    violations = 0
    for k in range(50):
        steps = rng.standard_normal(201) if k % 2 == 0 else rng.uniform(-1, 1, 201) * rng.uniform(0.1, 5)
        x = np.cumsum(steps)
        x = x + abs(x.min()) + 1
        counts = [count_switches(solve_trade(x, e)[0]) for e in DEFAULT_SCHEDULE]
        violations += sum(b > a for a, b in zip(counts, counts[1:]))
    record("6 L(eps) monotone", violations == 0, f"violations={violations}")
    assert violations == 0


def test_07_mirror_symmetry(record):
    x = gen_example1().values[0]
    single = apts(MultiSeries(x)).breakpoints
    pair = apts(MultiSeries(np.vstack([x, -x]))).breakpoints
    record("7 mirror symmetry", pair == single, f"{pair} == {single}")
    assert pair == single


def test_08_noisy_consensus(record):
    clean = apts(gen_example1()).breakpoints
    noisy = apts(gen_noisy_replicas(gen_example1(), 100, 0.2, seed=9)).breakpoints
    ok = len(noisy) == 5 and within(noisy, clean, 3)
    record("8 noisy consensus", ok, f"tau={noisy} vs {clean} +-3")
    assert ok


@pytest.mark.slow
def test_09_scaling_law(record):
    base = stretch(gen_example1(), 430)
    data = {n: gen_noisy_replicas(base, n, 0.2, seed=0) for n in (10, 40, 100)}

    def best(algo, n, repeat):
        fn = solver(algo, data[n], k=5, lam=0.1, workers=1)
        fn()
        return time_call(fn, repeat)[1].min

    apts_t = {n: best("apts", n, 5) for n in (10, 40, 100)}
    ggs_t = {n: best("ggs", n, 2) for n in (10, 40)}
    apts_100 = apts_t[100] / apts_t[10]
    apts_40 = apts_t[40] / apts_t[10]
    ggs_40 = ggs_t[40] / ggs_t[10]
    ok = apts_100 < 15 and ggs_40 > apts_40
    record("9 scaling", ok,
           f"apts t100/t10={apts_100:.2f} (<15); ggs t40/t10={ggs_40:.2f} > apts t40/t10={apts_40:.2f}")
    assert ok


def test_10_plateau_extension(record):
    s, plateaus = gen_plateaus(noise=0.01)
    r = apts(s, AptsConfig(gamma_plat=0.05))
    marks = [p for pl in plateaus for p in pl]
    hit = all(any(abs(b - m) <= 1 for b in r.breakpoints) for m in marks)

    rng = np.random.default_rng(10)
    x = np.cumsum(rng.standard_normal((2, 150)), axis=1)
    assert np.all(np.diff(x, axis=1) != 0)
    v = MultiSeries(x)
    same = apts(v, AptsConfig(gamma_plat=0.0), plateau=True).breakpoints == \
        apts(v, AptsConfig(gamma_plat=0.0), plateau=False).breakpoints
    ok = hit and same
    record("10 plateaus", ok, f"tau={r.breakpoints} plateaus={plateaus}; gamma_plat=0 identical={same}")
    assert ok


def test_11_contract_suite(record):
    rng = np.random.default_rng(11)
    failures = []
    for k in range(1000):
        n_x = int(rng.integers(1, 5))
        T = int(rng.integers(1, 80))
        kind = k % 4
        if kind == 0:
            x = np.cumsum(rng.standard_normal((n_x, T + 1)), axis=1)
        elif kind == 1:
            x = rng.uniform(-5, 5, (n_x, T + 1))
        elif kind == 2:
            x = rng.integers(-2, 3, (n_x, T + 1)).astype(float)
        else:
            x = np.sin(np.linspace(0, rng.uniform(1, 20), T + 1))[None, :] * rng.uniform(0.1, 10, (n_x, 1))
        cfg = AptsConfig(k_max=int(rng.integers(1, 11)), gamma_plat=float(rng.choice([0.0, 0.05])))
        s = MultiSeries(x)
        r1, r2 = apts(s, cfg), apts(s, cfg)
        b = r1.breakpoints
        if not (all(0 < t < T for t in b) and all(a < c for a, c in zip(b, b[1:]))):
            failures.append((k, "order", b))
        if len(b) > cfg.k_max:
            failures.append((k, "k_max", b))
        if b != r2.breakpoints:
            failures.append((k, "determinism", b))
        if any(n != 0 for n in r1.reverse_iterations):
            failures.append((k, "reverse iterations", r1.reverse_iterations))
    record("11 contract suite", not failures, f"failures={len(failures)}/1000 {failures[:3]}")
    assert not failures
