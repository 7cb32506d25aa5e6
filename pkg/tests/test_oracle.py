import itertools
import random

import pytest

from qflocal.lattice import LatticeSpec, parse_lattice, q_value
from qflocal.oracle import (
    BudgetExceeded,
    EnumBudget,
    count_enumerate,
    count_q_enumerate,
    count_sum_squares_enumerate,
)


def test_count_examples():
    assert count_enumerate(parse_lattice("H0", 2), 3, 4) == 16
    assert count_enumerate(parse_lattice("L3", 2), 1, 2) == 8
    assert count_enumerate(parse_lattice("H0", 2), 2, 1) == 0


def test_sum_squares_examples():
    assert count_sum_squares_enumerate(3, 3, 7) == 0
    assert count_sum_squares_enumerate(4, 4, 8) == 1536
    assert count_sum_squares_enumerate(3, 0, 5) == 1


def test_budget_error_carries_required_count():
    budget = EnumBudget(max_states=100)
    with pytest.raises(BudgetExceeded) as err:
        count_enumerate(parse_lattice("H0", 2), 4, 1, budget)
    assert err.value.required == 4**4
    assert err.value.max_states == 100
    with pytest.raises(BudgetExceeded) as err:
        count_sum_squares_enumerate(3, 4, 1, budget)
    assert err.value.required == 2**12


def test_budget_validation():
    with pytest.raises(ValueError):
        EnumBudget(0)


def test_congruence_only_dependence():
    rng = random.Random(31)
    spec = parse_lattice("H1 + <3>", 2)
    for _ in range(50):
        m = rng.randint(1, 4)
        t = rng.randint(-100, 100)
        shift = 2**m * rng.randint(-3, 3)
        assert count_enumerate(spec, m, t) == count_enumerate(spec, m, t + shift)


def test_determinism():
    spec = parse_lattice("H0 + <5>", 2)
    values = {count_enumerate(spec, 3, 7) for _ in range(5)}
    assert len(values) == 1


def _dumb_count(spec, m, t):
    """The dumbest possible count: evaluate Q on the full product space."""
    n = spec.p**m
    return sum(
        1
        for vec in itertools.product(range(n), repeat=spec.rank)
        if q_value(spec, m, vec) == t % n
    )


@pytest.mark.parametrize(
    "text,p",
    [
        ("H0", 2),
        ("H1", 2),
        ("<3>", 2),
        ("<12>", 2),
        ("H0 + <1>", 2),
        ("<2> + H1", 2),
        ("H0", 3),
        ("<6>", 3),
        ("H0 + <2>", 5),
    ],
)
def test_histogram_count_equals_dumb_product_count(text, p):
    spec = parse_lattice(text, p)
    for m in (1, 2):
        n = spec.p**m
        if n**spec.rank > 4**6:
            continue
        for t in range(n):
            assert count_enumerate(spec, m, t) == _dumb_count(spec, m, t), (text, m, t)


def test_convolution_matches_per_block_product():
    # The orthogonal-sum count equals the convolution of per-block counts.
    left = parse_lattice("H0", 2)
    right = parse_lattice("<3>", 2)
    both = parse_lattice("H0 + <3>", 2)
    for m in (1, 2, 3):
        n = 2**m
        for t in range(n):
            direct = count_enumerate(both, m, t)
            conv = sum(
                count_enumerate(left, m, s) * count_enumerate(right, m, t - s)
                for s in range(n)
            )
            assert direct == conv


def _dumb_q_count(spec, m, t_prime):
    n = spec.p**m
    if spec.p == 2:
        # q(v) = Q(v)/2 read off modulo 2^m needs Q modulo 2^(m+1).
        count = 0
        for vec in itertools.product(range(n), repeat=spec.rank):
            if q_value(spec, m + 1, vec) == (2 * t_prime) % (2 * n):
                count += 1
        return count
    return _dumb_count(spec, m, 2 * t_prime)


@pytest.mark.parametrize("text,p", [("H0", 2), ("H1", 2), ("<2>", 2), ("L3", 2), ("H0", 3)])
def test_q_count_matches_dumb_definition(text, p):
    spec = parse_lattice(text, p)
    for m in (1, 2):
        n = spec.p**m
        if n**spec.rank > 4**6:
            continue
        for tp in range(n):
            assert count_q_enumerate(spec, m, tp) == _dumb_q_count(spec, m, tp)


def test_q_count_rejects_odd_lattice():
    with pytest.raises(ValueError, match="even lattice"):
        count_q_enumerate(parse_lattice("<1>", 2), 3, 1)


def test_level_zero_sum_squares():
    for a in (-3, 0, 5):
        assert count_sum_squares_enumerate(2, 0, a) == 1
