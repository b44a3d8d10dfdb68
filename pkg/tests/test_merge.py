import pytest
from hypothesis import given, strategies as st

from aptseg.core import LengthMismatch, Segmentation
from aptseg.merge import merge, prune

T = 100


def seg(*b, source="forward"):
    return Segmentation(tuple(b), T, source)


def test_merge_averages_close_pair():
    assert merge(seg(10, 50), seg(11, 80, source="reverse"), 2, 10).breakpoints == (10, 50, 80)


def test_merge_prunes_to_k_max():
    assert merge(seg(10, 12, 50), seg(source="reverse"), 2, 2).breakpoints == (10, 50)


def test_merge_duplicates_collapse():
    assert merge(seg(20, 40), seg(20, 40), 2, 10).breakpoints == (20, 40)


def test_merge_prefers_nearest_partner():
    assert merge(seg(10), seg(8, 11), 3, 10).breakpoints == (8, 10)


def test_prune_tie_removes_later():
    assert prune([10, 12, 14, 50], 3) == [10, 12, 50]


def test_merge_length_mismatch():
    with pytest.raises(LengthMismatch):
        merge(seg(5), Segmentation((5,), 50), 2, 10)


bps = st.lists(st.integers(1, T - 1), max_size=12, unique=True).map(sorted)


@given(bps, bps, st.floats(0.5, 10), st.integers(1, 12))
def test_merge_contract(f, r, gamma, k_max):
    out = merge(seg(*f), seg(*r), gamma, k_max).breakpoints
    assert len(out) <= k_max
    assert all(0 < b < T for b in out)
    assert list(out) == sorted(set(out))
    inputs = f + r
    assert all(min(abs(b - x) for x in inputs) < max(gamma, 1) for b in out)


@given(bps, bps, st.floats(0.5, 10), st.integers(1, 12))
def test_merge_commutes(f, r, gamma, k_max):
    # floor averaging is symmetric, so swapping the inputs changes nothing here
    assert merge(seg(*f), seg(*r), gamma, k_max).breakpoints == merge(seg(*r), seg(*f), gamma, k_max).breakpoints


@given(bps, bps, st.floats(0.5, 10), st.integers(1, 12))
def test_merge_idempotent(f, r, gamma, k_max):
    m = merge(seg(*f), seg(*r), gamma, k_max)
    assert merge(m, m, gamma, k_max).breakpoints == m.breakpoints
