import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aptseg.core import AptsConfig, MultiSeries, validate_series
from aptseg.generators import gen_example1, gen_example2, gen_fig1_three_channel, gen_plateaus
from aptseg.pipeline import apts, reverse_index_map


def test_reverse_index_map():
    assert reverse_index_map([-1, 1, 1]).tolist() == [1, 1, -1]
    pal = np.array([-1, 1, -1])
    assert reverse_index_map(pal).tolist() == pal.tolist()
    s = np.array([-1, 1, 1, -1, 1])
    assert reverse_index_map(reverse_index_map(s)).tolist() == s.tolist()


def test_example1():
    r = apts(gen_example1())
    assert r.breakpoints == (16, 33, 50, 66, 83)
    # forward sign changes trail each extremum by one index, reverse ones sit on it
    assert r.forward.breakpoints == (17, 34, 51, 67, 84)
    assert r.reverse.breakpoints == (16, 33, 50, 66, 83)


def test_example2_within_one():
    r = apts(gen_example2())
    assert len(r.breakpoints) == 5
    assert all(abs(a - b) <= 1 for a, b in zip(r.breakpoints, (16, 33, 49, 66, 82)))


def test_three_channel_figure():
    r = apts(gen_fig1_three_channel())
    assert r.breakpoints == (16, 33, 50, 66, 83)


def test_result_carries_channel_signals():
    s = gen_fig1_three_channel()
    r = apts(s)
    assert len(r.forward_signals) == len(r.reverse_signals) == 3
    assert all(sig.values.size == s.T + 1 for sig in r.forward_signals)
    assert all(v[-1] == -1 for v in r.reverse_signals_forward)
    assert r.reverse_iterations == [0, 0, 0]
    assert r.forward_trace.q.size == s.T + 1


def test_all_constant_channels():
    r = apts(validate_series([[2.0] * 10, [-1.0] * 10]))
    assert r.degenerate
    assert r.breakpoints == ()


def test_weights_used():
    s = MultiSeries(np.vstack([gen_example1().values[0], np.linspace(0, 1, 100) ** 2]))
    only_first = apts(s, AptsConfig(weights=(1.0, 0.0)))
    assert only_first.breakpoints == apts(gen_example1()).breakpoints


def test_process_pool_matches_serial():
    s = gen_fig1_three_channel()
    assert apts(s, workers=2).breakpoints == apts(s).breakpoints


def test_plateau_filter_marks_entry_and_exit():
    s, plateaus = gen_plateaus()
    r = apts(s, AptsConfig(gamma_plat=0.05))
    for entry, exit_ in plateaus:
        assert any(abs(b - entry) <= 1 for b in r.breakpoints)
        assert any(abs(b - exit_) <= 1 for b in r.breakpoints)


walks = st.builds(
    lambda seed, n_x, T: np.cumsum(np.random.default_rng(seed).standard_normal((n_x, T + 1)), axis=1),
    st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(1, 40),
)


@settings(max_examples=60, deadline=None)
@given(walks, st.integers(1, 10), st.sampled_from([0.0, 0.05]))
def test_contract(values, k_max, gamma_plat):
    s = MultiSeries(values)
    cfg = AptsConfig(k_max=k_max, gamma_plat=gamma_plat)
    r1, r2 = apts(s, cfg), apts(s, cfg)
    b = r1.breakpoints
    assert list(b) == sorted(set(b)) and all(0 < x < s.T for x in b)
    assert len(b) <= k_max
    assert b == r2.breakpoints
    assert [x.values.tolist() for x in r1.forward_signals] == [x.values.tolist() for x in r2.forward_signals]
    assert all(n == 0 for n in r1.reverse_iterations)
