"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (visible with pytest -s or in the
captured output of a failing run).  All comparisons are exact; there are
no tolerances anywhere.
"""

import sys
from contextlib import contextmanager
from fractions import Fraction

from qflocal import compose, densities, genseries, verify
from qflocal.closed_counts import count_h0, count_h1
from qflocal.lattice import parse_lattice
from qflocal.oracle import DEFAULT_BUDGET


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"[criterion {number}] FAIL - {description}", file=sys.stderr)
        raise
    print(f"[criterion {number}] PASS - {description}")


def _assert_all_pass(results, allow_skip=False):
    failed = [r for r in results if r.status == "fail"]
    assert not failed, "failures: " + "; ".join(
        f"{r.suite}/{r.instance}: {r.detail}" for r in failed[:5]
    )
    if not allow_skip:
        skipped = [r for r in results if r.status == "skip"]
        assert not skipped, "unexpected skips: " + "; ".join(
            f"{r.suite}/{r.instance}" for r in skipped[:5]
        )
    return results


def test_criterion_1_oracle_equivalence():
    with criterion(1, "closed-form counts equal enumeration for every residue, "
                      "every menu block, all levels with p^(m*rank) <= 2^22"):
        results = _assert_all_pass(verify.suite_oracle(DEFAULT_BUDGET, state_cap=1 << 22))
        assert len(results) >= 300  # 357 (block, level) sweeps at this cap


def test_criterion_2_table_reproduction():
    with criterion(2, "summary-table densities reproduced exactly over v <= 6, "
                      "all unit classes mod 8, k <= 2, with the Type I unit gate"):
        _assert_all_pass(verify.suite_table1(DEFAULT_BUDGET, vmax=6))


def test_criterion_3_half_lift_certificates():
    with criterion(3, "half-lift certificates for d in {1,2,3}, n in {3,4}, all "
                      "primitive a, plus the (4,3,8) negative control at ratio 12"):
        _assert_all_pass(verify.suite_halflift(DEFAULT_BUDGET, ds=(1, 2, 3), ns=(3, 4)))


def test_criterion_4_three_squares_closed_form():
    with criterion(4, "three-squares closed form matches enumeration for all "
                      "nonzero |a| <= 64 and 2k+3 <= n <= 7"):
        _assert_all_pass(verify.suite_sumsquares(DEFAULT_BUDGET, amax=64, nmax=7))


def test_criterion_5_dictionary_and_uniformity():
    with criterion(5, "q-dictionary identity on even menu blocks for m <= 8 and "
                      "the prime-uniform q-density formula incl. the 3/2 anchor"):
        _assert_all_pass(verify.suite_dictionary(DEFAULT_BUDGET, mmax=8))
        _assert_all_pass(verify.suite_uniformity(DEFAULT_BUDGET))


def test_criterion_6_convolution_example():
    with criterion(6, "H0 + <1> densities 2, 1, 1/2 for t = 1, 5, {3,7} mod 8 "
                      "through both convolution engines"):
        spec = parse_lattice("H0 + <1>", 2)
        expected = {1: Fraction(2), 5: Fraction(1), 3: Fraction(1, 2), 7: Fraction(1, 2)}
        for t0, alpha in expected.items():
            for t in (t0, t0 + 8, t0 + 24, t0 - 32):
                naive = densities.density(spec, t, engine="naive")
                stratified = densities.density(spec, t, engine="stratified")
                assert naive.alpha == alpha, (t, naive)
                assert stratified.alpha == alpha, (t, stratified)
                assert naive.stabilized_at == stratified.stabilized_at
        # engine agreement beyond the example
        _assert_all_pass(verify.suite_convolution(DEFAULT_BUDGET, mmax=12), allow_skip=True)


def test_criterion_7_l3_cross_derivation():
    with criterion(7, "density(L3, t) equals the stabilized density of "
                      "<2> + <2> + <2> via convolution for the stated targets"):
        _assert_all_pass(verify.suite_l3cross(DEFAULT_BUDGET))


def test_criterion_8_generating_series():
    with criterion(8, "series coefficients 1..12 match counts; closed forms "
                      "4X(1-X)/(1-2X)^2 and 4X(1+X)/(1-4X^2) in reduced normal form"):
        _assert_all_pass(verify.suite_series(DEFAULT_BUDGET, mmax=12))
        s = genseries.series_h0(2, 0, 0)
        assert s.num == genseries.poly([0, 4, -4])
        assert s.den == genseries.poly([1, -4, 4])
        s1 = genseries.series_h1(0)
        assert s1.num == genseries.poly([0, 4, 4])
        assert s1.den == genseries.poly([1, 0, -4])


def test_criterion_9_singular_targets():
    with criterion(9, "2^-m r_m(0; H0) = m+1 and 2^-m r_m(0; H1) alternates "
                      "between 2 and 1, for m <= 12"):
        for m in range(1, 13):
            assert Fraction(count_h0(2, 0, m, 0), 1 << m) == m + 1
            assert Fraction(count_h1(0, m, 0), 1 << m) == (2 if m % 2 else 1)
        _assert_all_pass(verify.suite_singular(DEFAULT_BUDGET, mmax=12))
