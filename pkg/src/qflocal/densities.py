"""Local representation densities in both normalisations.

For a rank-n lattice and a nonzero target the density is the eventual
constant value of p^(-m(n-1)) r_m(t; L).  Single blocks evaluate by closed
form; orthogonal sums probe three consecutive levels starting at the
stable threshold and accept only when all three normalised counts agree
exactly (extending the window on disagreement, never smoothing it).

t = 0 has no density: the normalised counts grow without bound for the
split plane and oscillate for the anisotropic one.  Those two facts are
reported as structured results for the unscaled single planes at p = 2;
every other singular request is a typed error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import compose
from .closed_counts import count_lattice, decompose_pow4, n3_mod8
from .lattice import L3, LatticeSpec, ScaledH0, ScaledH1, TypeI
from .oracle import DEFAULT_BUDGET, EnumBudget
from .padic import as_int, unit_part, valuation


class SingularTargetError(ValueError):
    """Raised for t = 0 wherever no finite-level law is on record."""


class NonStabilizationError(ArithmeticError):
    """Normalised counts failed to settle within the probed levels."""


@dataclass(frozen=True)
class DensityValue:
    alpha: Fraction
    stabilized_at: int
    provenance: str  # "closed-form" | "structural-zero" | "stabilized-convolution" | "stabilized-enumeration"

    def to_json(self, normalization: str = "Q") -> dict:
        return {
            "status": "value",
            "alpha": {"num": self.alpha.numerator, "den": self.alpha.denominator},
            "normalization": normalization,
            "stabilized_at": self.stabilized_at,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class Diverges:
    description: str

    def to_json(self, normalization: str = "Q") -> dict:
        return {
            "status": "diverges",
            "normalization": normalization,
            "description": self.description,
        }


@dataclass(frozen=True)
class Oscillates:
    accumulation_values: tuple

    def to_json(self, normalization: str = "Q") -> dict:
        return {
            "status": "oscillates",
            "normalization": normalization,
            "accumulation_values": [
                {"num": v.numerator, "den": v.denominator}
                for v in self.accumulation_values
            ],
        }


@dataclass(frozen=True)
class VanishingRule:
    """Valuation/parity constraints necessary for a nonzero density.

    ``unit_condition`` records any additional unit-class gate as text; it
    is informational, while ``allows`` is the machine-checkable part.
    """

    normalization: str
    min_valuation: int
    parity_anchor: int | None = None
    parity: str | None = None
    unit_condition: str | None = None

    def allows(self, v: int) -> bool:
        if v < self.min_valuation:
            return False
        if self.parity is not None:
            want = 0 if self.parity == "even" else 1
            if (v - self.parity_anchor) % 2 != want:
                return False
        return True

    def describe(self) -> str:
        parts = [f"v >= {self.min_valuation}"]
        if self.parity is not None:
            parts.append(f"v - {self.parity_anchor} {self.parity}")
        if self.unit_condition:
            parts.append(self.unit_condition)
        return ", ".join(parts)

    def to_json(self) -> dict:
        return {
            "normalization": self.normalization,
            "min_valuation": self.min_valuation,
            "parity_anchor": self.parity_anchor,
            "parity": self.parity,
            "unit_condition": self.unit_condition,
        }


@dataclass(frozen=True)
class ThresholdInfo:
    stable_m: int | None
    vanishing_constraints: dict | None

    def to_json(self) -> dict:
        constraints = None
        if self.vanishing_constraints is not None:
            constraints = {
                key: (rule.to_json() if rule is not None else None)
                for key, rule in self.vanishing_constraints.items()
            }
        return {"stable_m": self.stable_m, "vanishing_constraints": constraints}


def _block_threshold(block, v: int) -> int:
    if isinstance(block, (ScaledH0, ScaledH1)):
        return v + 1
    # Rank-one and L3 blocks stabilise two levels later than the planes.
    # At odd primes the rank-one bound v+1 would do; v+3 is kept uniform.
    if isinstance(block, (TypeI, L3)):
        return v + 3
    raise TypeError(f"unknown block: {block!r}")


def stable_threshold(spec: LatticeSpec, t) -> ThresholdInfo:
    """Smallest level at which the stabilised count formulas apply.

    Orthogonal sums take the maximum of the per-block thresholds plus one
    extra level for the iterated stratification.
    """
    t = as_int(t)
    if t == 0:
        raise SingularTargetError("no stable threshold for singular target")
    v = valuation(spec.p, t)
    per_block = max(_block_threshold(b, v) for b in spec.blocks)
    if len(spec.blocks) > 1:
        per_block += 1
    return ThresholdInfo(stable_m=per_block, vanishing_constraints=None)


def vanishing_constraints(spec: LatticeSpec) -> ThresholdInfo:
    """Machine-readable nonvanishing constraints for a single dyadic block.

    Returned in both normalisations; the q-side is None for a block that
    is not even (Type I with a = 0), since q = Q/2 is not integral there.
    """
    if spec.p != 2:
        raise ValueError("vanishing constraints are recorded for dyadic blocks only")
    if len(spec.blocks) != 1:
        raise ValueError("vanishing constraints apply to a single block")
    block = spec.blocks[0]
    if isinstance(block, ScaledH0):
        q_rule = VanishingRule("q", block.e)
        rule = VanishingRule("Q", block.e + 1)
    elif isinstance(block, ScaledH1):
        q_rule = VanishingRule("q", block.e, block.e, "even")
        rule = VanishingRule("Q", block.e + 1, block.e, "odd")
    elif isinstance(block, TypeI):
        unit = "u^-1 c = 1 (mod 8) for t = 2^(a+2j) c"
        rule = VanishingRule("Q", block.a, block.a, "even", unit)
        q_rule = (
            VanishingRule("q", block.a - 1, block.a - 1, "even", unit)
            if block.a >= 1
            else None
        )
    elif isinstance(block, L3):
        unit = "a0 != 7 (mod 8) for t/2 = 4^k a0"
        rule = VanishingRule("Q", 1, unit_condition=unit)
        q_rule = VanishingRule("q", 0, unit_condition="a0 != 7 (mod 8) for t' = 4^k a0")
    else:
        raise TypeError(f"unknown block: {block!r}")
    return ThresholdInfo(stable_m=None, vanishing_constraints={"Q": rule, "q": q_rule})


DEFAULT_PROBE_WINDOW = 3
DEFAULT_EXTRA_LEVELS = 9


def _single_block_closed(spec: LatticeSpec, block, t: int) -> DensityValue:
    p = spec.p
    v = valuation(p, t)
    stabilized = stable_threshold(spec, t).stable_m
    if isinstance(block, ScaledH0):
        if p == 2:
            if v < block.e + 1:
                return DensityValue(Fraction(0), stabilized, "structural-zero")
            return DensityValue(Fraction((v - block.e) << block.e), stabilized, "closed-form")
        if v < block.e:
            return DensityValue(Fraction(0), stabilized, "structural-zero")
        return DensityValue(
            Fraction((v - block.e + 1) * (p - 1) * p**block.e, p),
            stabilized,
            "closed-form",
        )
    if isinstance(block, ScaledH1):
        if v < block.e + 1 or (v - block.e) % 2 == 0:
            return DensityValue(Fraction(0), stabilized, "structural-zero")
        return DensityValue(Fraction(3 << block.e), stabilized, "closed-form")
    if isinstance(block, TypeI):
        if v < block.a or (v - block.a) % 2 == 1:
            return DensityValue(Fraction(0), stabilized, "structural-zero")
        j = (v - block.a) // 2
        c = unit_part(2, t)
        if (pow(block.u, -1, 8) * c) % 8 == 1:
            return DensityValue(Fraction(1 << (block.a + j + 2)), stabilized, "closed-form")
        return DensityValue(Fraction(0), stabilized, "closed-form")
    if isinstance(block, L3):
        if t % 2 != 0:
            return DensityValue(Fraction(0), stabilized, "structural-zero")
        k, a0 = decompose_pow4(t // 2)
        return DensityValue(
            Fraction(n3_mod8(a0), 1 << (k + 5)), stabilized, "closed-form"
        )
    raise TypeError(f"unknown block: {block!r}")


def _level_count(spec: LatticeSpec, m: int, t: int, budget: EnumBudget, engine: str) -> int:
    if engine == "naive" or len(spec.blocks) == 1:
        return count_lattice(spec, m, t, budget)
    if engine == "stratified":
        head, last = spec.head_and_last()
        return compose.convolve_stratified(head, last, m, t, budget).count
    raise ValueError(f"unknown engine: {engine!r}")


def _stabilized(spec: LatticeSpec, t: int, budget: EnumBudget, engine: str,
                provenance: str, max_level: int | None) -> DensityValue:
    start = stable_threshold(spec, t).stable_m
    if max_level is None:
        max_level = start + DEFAULT_EXTRA_LEVELS
    n = spec.rank
    values = []
    for m in range(start, max_level + 1):
        count = _level_count(spec, m, t, budget, engine)
        values.append(Fraction(count, spec.p ** (m * (n - 1))))
        if len(values) >= DEFAULT_PROBE_WINDOW:
            window = values[-DEFAULT_PROBE_WINDOW:]
            if all(x == window[0] for x in window):
                return DensityValue(
                    window[0],
                    m - DEFAULT_PROBE_WINDOW + 1,
                    provenance,
                )
    raise NonStabilizationError(
        f"normalised counts did not stabilise by level {max_level}: "
        + ", ".join(str(v) for v in values)
    )


def _singular(spec: LatticeSpec) -> object:
    if spec.p == 2 and len(spec.blocks) == 1:
        block = spec.blocks[0]
        if isinstance(block, ScaledH0) and block.e == 0:
            return Diverges("2^-m r_m(0; H0) = m + 1 grows without bound")
        if isinstance(block, ScaledH1) and block.e == 0:
            return Oscillates((Fraction(1), Fraction(2)))
    raise SingularTargetError("unsupported singular target t=0")


def density(spec: LatticeSpec, t, budget: EnumBudget = DEFAULT_BUDGET,
            engine: str = "naive", max_level: int | None = None):
    """Q-normalised local density of the target t, as a DensityResult."""
    t = as_int(t)
    if t == 0:
        return _singular(spec)
    if len(spec.blocks) == 1:
        block = spec.blocks[0]
        if spec.p != 2 and isinstance(block, TypeI):
            # No closed form on record at odd primes: observe stabilisation
            # of the enumerated counts directly.
            return _stabilized(spec, t, budget, "naive", "stabilized-enumeration", max_level)
        return _single_block_closed(spec, block, t)
    return _stabilized(spec, t, budget, engine, "stabilized-convolution", max_level)


def _halve(result: DensityValue) -> DensityValue:
    return DensityValue(result.alpha / 2, result.stabilized_at, result.provenance)


def density_q(spec: LatticeSpec, t_prime, budget: EnumBudget = DEFAULT_BUDGET,
              engine: str = "naive", max_level: int | None = None):
    """Density in the q = Q/2 normalisation.

    At p = 2 the lattice must be even and the value is density(2t')/2.
    At odd primes 2 is a unit, so the q-count at level m is the plain
    count at target 2t' and no halving occurs.
    """
    t_prime = as_int(t_prime)
    if t_prime == 0:
        raise SingularTargetError("unsupported singular target t'=0")
    if spec.p != 2:
        return density(spec, 2 * t_prime, budget, engine, max_level)
    if not spec.is_even():
        raise ValueError("q-normalisation requires an even lattice")
    return _halve(density(spec, 2 * t_prime, budget, engine, max_level))
