import json
from fractions import Fraction

import pytest

from qflocal.closed_counts import count_lattice
from qflocal.densities import (
    DensityValue,
    Diverges,
    NonStabilizationError,
    Oscillates,
    SingularTargetError,
    density,
    density_q,
    stable_threshold,
    vanishing_constraints,
)
from qflocal.lattice import parse_lattice
from qflocal.oracle import count_enumerate


def P(text, p=2):
    return parse_lattice(text, p)


class TestThresholds:
    def test_examples(self):
        assert stable_threshold(P("H0"), 8).stable_m == 4
        assert stable_threshold(P("<1>"), 4).stable_m == 5
        assert stable_threshold(P("L3"), 6).stable_m == 4

    def test_multi_block_adds_one(self):
        assert stable_threshold(P("H0 + <1>"), 1).stable_m == 4

    def test_singular_target_rejected(self):
        with pytest.raises(SingularTargetError):
            stable_threshold(P("H0"), 0)


class TestSingleBlockDensities:
    def test_examples(self):
        assert density(P("H1"), 2) == DensityValue(Fraction(3), 2, "closed-form")
        assert density(P("L3"), 6).alpha == 2
        assert density(P("H0 + <1>"), 3).alpha == Fraction(1, 2)
        assert density(P("<1>"), 4).alpha == 8

    def test_structural_vs_computed_zero(self):
        gated = density(P("<5>"), 1)  # unit gate fails: 5^-1 * 1 = 5 mod 8
        assert gated.alpha == 0 and gated.provenance == "closed-form"
        structural = density(P("<5>"), 2)  # odd valuation difference
        assert structural.alpha == 0 and structural.provenance == "structural-zero"
        assert density(P("H1"), 4).provenance == "structural-zero"

    def test_odd_prime_hyperbolic(self):
        for p in (3, 5):
            for v in range(4):
                got = density(P("H0", p), p**v * 2).alpha
                assert got == Fraction((v + 1) * (p - 1), p)

    def test_odd_prime_type_one_stabilizes(self):
        result = density(P("<3>", 3), 3)
        assert result.provenance == "stabilized-enumeration"
        assert result.alpha == 6
        assert density(P("<3>", 3), 1).alpha == 0  # 3 x^2 = 1 has no 3-adic solution
        # nonresidue unit: 3 x^2 = 6 needs x^2 = 2, not a square mod 3
        assert density(P("<3>", 3), 6).alpha == 0

    def test_closed_form_matches_stable_levels(self):
        cases = [("H0", (2, 8, -4)), ("H1", (2, 6, 8)), ("<1>", (1, 4, 9, 8)),
                 ("<12>", (12, 3, 48)), ("L3", (2, 6, 14, 16)), ("2^1*H1", (4, 8))]
        for text, targets in cases:
            spec = P(text)
            n = spec.rank
            for t in targets:
                result = density(spec, t)
                m0 = stable_threshold(spec, t).stable_m
                for m in (m0, m0 + 1, m0 + 2):
                    level = Fraction(count_lattice(spec, m, t), 2 ** (m * (n - 1)))
                    assert level == result.alpha, (text, t, m)

    def test_matches_oracle_outright(self):
        for text, t in [("H0", 4), ("H1", 2), ("<3>", 12), ("L3", 6)]:
            spec = P(text)
            m0 = stable_threshold(spec, t).stable_m
            n = spec.rank
            for m in (m0, m0 + 1):
                if 2 ** (m * n) > 2**22:
                    continue
                assert density(spec, t).alpha == Fraction(
                    count_enumerate(spec, m, t), 2 ** (m * (n - 1))
                )


class TestSums:
    def test_example_densities_both_engines(self):
        spec = P("H0 + <1>")
        table = {1: 2, 5: 1, 3: Fraction(1, 2), 7: Fraction(1, 2)}
        for t0, alpha in table.items():
            for t in (t0, t0 + 8, t0 - 32):
                for engine in ("naive", "stratified"):
                    result = density(spec, t, engine=engine)
                    assert result.alpha == alpha, (t, engine)
                    assert result.provenance == "stabilized-convolution"

    def test_l3_cross_derivation(self):
        triple = P("<2> + <2> + <2>")
        for t in (2, 4, 6, 8, 10, 12, 16, 24):
            direct = density(P("L3"), t).alpha
            assert density(triple, t).alpha == direct
            assert density(triple, t, engine="stratified").alpha == direct

    def test_non_stabilization_is_loud(self):
        spec = P("H0 + <1>")
        with pytest.raises(NonStabilizationError):
            density(spec, 1, max_level=stable_threshold(spec, 1).stable_m + 1)


class TestQNormalisation:
    def test_anchor(self):
        assert density_q(P("H1"), 1).alpha == Fraction(3, 2)

    def test_dictionary(self):
        for text in ("H0", "2^1*H0", "H1", "2^2*H1", "<2>", "<4>", "L3"):
            spec = P(text)
            for tp in (1, 2, 3, 4, 6, 8, -2):
                assert density(spec, 2 * tp).alpha == 2 * density_q(spec, tp).alpha

    def test_prime_uniform_formula(self):
        for p in (2, 3, 5):
            for e in (0, 1, 2):
                spec = P(f"{p}^{e}*H0" if e else "H0", p)
                for v in range(e, e + 4):
                    for u in (1, 3) if p == 2 else (1, 2):
                        got = density_q(spec, p**v * u).alpha
                        assert got == Fraction((v - e + 1) * (p - 1) * p**e, p)
                for v in range(e):
                    assert density_q(spec, p**v).alpha == 0

    def test_odd_lattice_rejected(self):
        with pytest.raises(ValueError, match="even lattice"):
            density_q(P("<1>"), 1)
        with pytest.raises(ValueError, match="even lattice"):
            density_q(P("H0 + <1>"), 1)

    def test_singular_rejected(self):
        with pytest.raises(SingularTargetError):
            density_q(P("H0"), 0)


class TestSingularTargets:
    def test_split_plane_diverges(self):
        result = density(P("H0"), 0)
        assert isinstance(result, Diverges)

    def test_anisotropic_plane_oscillates(self):
        result = density(P("H1"), 0)
        assert result == Oscillates((Fraction(1), Fraction(2)))

    def test_everything_else_refuses(self):
        for text in ("<1>", "<2>", "L3", "2^1*H0", "2^1*H1", "H0 + <1>"):
            with pytest.raises(SingularTargetError):
                density(P(text), 0)
        with pytest.raises(SingularTargetError):
            density(P("H0", 3), 0)


class TestVanishingConstraints:
    def test_examples(self):
        rules = vanishing_constraints(P("2^1*H1")).vanishing_constraints
        assert rules["Q"].min_valuation == 2
        assert rules["Q"].parity == "odd" and rules["Q"].parity_anchor == 1
        assert rules["q"].min_valuation == 1 and rules["q"].parity == "even"

        rules = vanishing_constraints(P("H0")).vanishing_constraints
        assert rules["Q"].min_valuation == 1 and rules["Q"].parity is None
        assert rules["q"].min_valuation == 0

        rules = vanishing_constraints(P("<4>")).vanishing_constraints
        assert rules["Q"].min_valuation == 2 and rules["Q"].parity == "even"
        assert rules["Q"].parity_anchor == 2

    def test_rejections(self):
        with pytest.raises(ValueError, match="single block"):
            vanishing_constraints(P("H0 + <1>"))
        with pytest.raises(ValueError, match="dyadic"):
            vanishing_constraints(P("H0", 3))

    def test_rejected_targets_have_zero_density(self):
        from qflocal.padic import valuation

        for text in ("H0", "2^1*H0", "H1", "2^2*H1", "<2>", "<12>", "L3"):
            spec = P(text)
            rule = vanishing_constraints(spec).vanishing_constraints["Q"]
            for v in range(7):
                for u in (1, 3, 5, 7):
                    t = (1 << v) * u
                    if rule.allows(v):
                        continue
                    result = density(spec, t)
                    assert result.alpha == 0, (text, t)
                    assert result.provenance == "structural-zero"
                    # stable-range counts vanish as well
                    m0 = stable_threshold(spec, t).stable_m
                    assert count_lattice(spec, m0, t) == 0
                    assert count_lattice(spec, m0 + 1, t) == 0


class TestSerialization:
    def test_value_round_trip(self):
        payload = density(P("H0 + <1>"), 3).to_json("Q")
        back = json.loads(json.dumps(payload))
        assert back["status"] == "value"
        assert back["alpha"] == {"num": 1, "den": 2}
        assert back["normalization"] == "Q"
        assert back["provenance"] == "stabilized-convolution"

    def test_singular_round_trip(self):
        payload = density(P("H1"), 0).to_json("Q")
        assert payload["status"] == "oscillates"
        assert payload["accumulation_values"] == [
            {"num": 1, "den": 1},
            {"num": 2, "den": 1},
        ]
        payload = density(P("H0"), 0).to_json("Q")
        assert payload["status"] == "diverges"

    def test_threshold_json(self):
        info = vanishing_constraints(P("2^1*H1"))
        payload = info.to_json()
        assert payload["vanishing_constraints"]["Q"]["parity"] == "odd"
