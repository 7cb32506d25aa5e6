"""The compiled kernels must agree with the pure-Python reference exactly."""

import random

import pytest

from qflocal import _kernel, _purekernel

fast = pytest.importorskip("qflocal._fastkernel")


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_diag_matches_pure(d):
    rng = random.Random(100 + d)
    for _ in range(25):
        n_coord = 2 ** rng.randint(0, 9 - d)
        n_val = n_coord * rng.choice([1, 2])
        c = rng.randrange(n_val)
        assert list(fast.hist_diag(c, d, n_coord, n_val)) == _purekernel.hist_diag(
            c, d, n_coord, n_val
        )


def test_h0_h1_match_pure():
    rng = random.Random(200)
    for _ in range(40):
        base = rng.choice([2, 3, 5])
        n_coord = base ** rng.randint(1, 4 if base == 2 else 3)
        n_val = n_coord * rng.choice([1, 2] if base == 2 else [1])
        c = rng.randrange(n_val)
        assert list(fast.hist_h0(c, n_coord, n_val)) == _purekernel.hist_h0(c, n_coord, n_val)
        assert list(fast.hist_h1(c, n_coord, n_val)) == _purekernel.hist_h1(c, n_coord, n_val)


def test_histogram_total_is_state_count():
    for d, n_coord in [(1, 64), (2, 16), (3, 8)]:
        hist = _kernel.hist_diag(3 % n_coord, d, n_coord, n_coord)
        assert sum(hist) == n_coord**d


def test_dispatch_routes_unreduced_coefficient_to_pure():
    # The fast path requires 0 <= c < n_val; anything else must land on the
    # big-int fallback and still come out exact.
    out = _kernel.hist_diag(11, 1, 4, 8)
    assert isinstance(out, list)
    assert out == _purekernel.hist_diag(11, 1, 4, 8)
    assert out[0] == 1 and out[3] == 2 and out[4] == 1
