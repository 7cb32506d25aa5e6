import json
from fractions import Fraction

import pytest

from qflocal.halflift import (
    verify_descent,
    verify_fibre_invariance,
    verify_half_lift,
)
from qflocal.oracle import BudgetExceeded, EnumBudget, count_sum_squares_enumerate


class TestFibreInvariance:
    def test_examples(self):
        assert verify_fibre_invariance(3, 3, 3).fibre_sizes == (0, 8)
        assert set(verify_fibre_invariance(1, 2, 1).fibre_sizes) <= {0, 2}
        cert = verify_fibre_invariance(3, 3, 7)
        assert cert.fibre_sizes == () and cert.solutions_n == 0

    def test_all_or_nothing_everywhere(self):
        # Fibre invariance holds with no primitivity hypothesis at all.
        for d in (1, 2, 3):
            for n in (1, 2, 3):
                for a in range(2 ** (n + 1)):
                    cert = verify_fibre_invariance(d, n, a)
                    assert set(cert.fibre_sizes) <= {0, 2**d}, (d, n, a)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            verify_fibre_invariance(3, 5, 1, EnumBudget(1000))


class TestHalfLift:
    def test_certificate_example(self):
        cert = verify_half_lift(3, 3, 3)
        assert cert.solutions_n == 64
        assert cert.lifting_classes == 32
        assert cert.solutions_next == 256
        assert cert.orbit_pairs == 32
        assert cert.ratio == 4
        assert cert.hypotheses_ok

    def test_growth_factor_dimension_two(self):
        assert verify_half_lift(2, 3, 1).ratio == 2

    def test_refusal_names_hypothesis(self):
        cert = verify_half_lift(4, 3, 8)
        assert not cert.hypotheses_ok
        assert cert.failed_hypotheses == ("4 | a",)
        assert cert.solutions_n == 128
        assert cert.solutions_next == 1536
        assert cert.ratio == Fraction(12)
        assert cert.orbit_pairs is None

        low = verify_half_lift(2, 2, 1)
        assert low.failed_hypotheses == ("n < 3",)

    def test_exactly_half_on_grid(self):
        for d in (1, 2, 3):
            for n in (3, 4):
                for a in range(2 ** (n + 1)):
                    if a % 4 == 0:
                        continue
                    cert = verify_half_lift(d, n, a)
                    assert cert.hypotheses_ok
                    assert 2 * cert.lifting_classes == cert.solutions_n
                    assert cert.solutions_next == cert.solutions_n << (d - 1)
                    # independent oracle count for the next level
                    assert cert.solutions_next == count_sum_squares_enumerate(d, n + 1, a)

    def test_no_solutions_is_fine(self):
        cert = verify_half_lift(1, 3, 3)  # x^2 = 3 mod 8 has no solutions
        assert cert.solutions_n == 0 and cert.ratio is None and cert.hypotheses_ok

    def test_json_schema(self):
        payload = verify_half_lift(3, 3, 3).to_json()
        text = json.dumps(payload)
        back = json.loads(text)
        assert set(back) == {
            "d", "n", "a", "solutions_n", "lifting_classes", "solutions_next",
            "ratio_num", "ratio_den", "fibre_sizes", "hypotheses_ok",
            "failed_hypotheses", "orbit_pairs",
        }
        assert back["ratio_num"] == 4 and back["ratio_den"] == 1


class TestDescent:
    def test_examples(self):
        report = verify_descent(5, 12)
        assert report.ok and report.count_n == 512 and report.count_descended == 64
        report = verify_descent(3, 4)
        assert report.ok and report.count_n == 32 and report.count_descended == 4
        report = verify_descent(3, 8)
        assert report.ok and report.all_coordinates_even

    def test_preconditions(self):
        with pytest.raises(ValueError, match="4 \\| a|4 divides|needs 4"):
            verify_descent(4, 3)
        with pytest.raises(ValueError, match="n >= 3"):
            verify_descent(2, 4)

    def test_grid(self):
        for n in (3, 4, 5):
            for a in (4, 8, 12, 16, 20, -8):
                report = verify_descent(n, a)
                assert report.ok, (n, a, report)
