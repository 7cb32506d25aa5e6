"""Orthogonal-sum counts via convolution over the intermediate residue.

Two engines compute r_m(t; L1 + L2) = sum_s r_m(s; L1) r_m(t-s; L2):

* ``convolve_naive`` walks every residue s mod p^m; always applicable
  while the s-loop fits the budget.
* ``convolve_stratified`` partitions the s-range into O(m) valuation /
  unit-class strata on which both factors are constant, plus a geometric
  tail reparametrised by s = t + p^(w+1) u with w = v_p(t).  It needs the
  level to sit above every block's stable threshold and refuses otherwise.

Both engines return exact integers and agree wherever both run; the
stratified one additionally reports its stratum breakdown.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .closed_counts import count_lattice
from .lattice import L3, LatticeSpec, ScaledH0, ScaledH1, TypeI
from .oracle import DEFAULT_BUDGET, BudgetExceeded, EnumBudget
from .padic import as_int, valuation


class StratifiedRefusal(ValueError):
    """The stratified engine cannot serve this instance; use convolve_naive."""


@dataclass(frozen=True)
class Stratum:
    """One constant piece of the convolution sum.

    ``valuation`` is v_p(s) for main strata and the valuation of the tail
    parameter u for tail strata.  ``unit_class`` is the unit part mod 8 at
    p = 2 and None where no unit refinement is needed.
    """

    region: str  # "below-cut" | "above-cut" | "tail" | "zero-offset"
    valuation: int
    unit_class: int | None
    class_count: int
    representative: int
    per_residue_count_L: int
    per_residue_count_M: int

    @property
    def contribution(self) -> int:
        return self.class_count * self.per_residue_count_L * self.per_residue_count_M

    def to_json(self) -> dict:
        return {
            "region": self.region,
            "valuation": self.valuation,
            "unit_class": self.unit_class,
            "class_count": self.class_count,
            "representative": self.representative,
            "per_residue_count_L": self.per_residue_count_L,
            "per_residue_count_M": self.per_residue_count_M,
        }


@dataclass(frozen=True)
class StratifiedConvolution:
    count: int
    strata: tuple

    def to_json(self) -> dict:
        return {"count": self.count, "strata": [s.to_json() for s in self.strata]}


def block_stable_threshold(block, p: int, v: int) -> int:
    """Smallest level at which the block's count formulas are stable.

    Even planes stabilise one past the target valuation; rank-one and L3
    blocks three past it.  Rank-one blocks at odd primes have no published
    threshold and are rejected here.
    """
    if isinstance(block, (ScaledH0, ScaledH1)):
        return v + 1
    if isinstance(block, L3):
        return v + 3
    if isinstance(block, TypeI):
        if p != 2:
            raise StratifiedRefusal(
                "no stable stratification for rank-one blocks at odd primes"
            )
        return v + 3
    raise TypeError(f"unknown block: {block!r}")


@lru_cache(maxsize=128)
def _count_vector(spec: LatticeSpec, m: int, budget: EnumBudget) -> tuple:
    """(r_m(0;L), ..., r_m(N-1;L)) with N = p^m, folding blocks left-first."""
    n = spec.p**m
    if len(spec.blocks) == 1:
        return tuple(count_lattice(spec, m, s, budget) for s in range(n))
    head, last = spec.head_and_last()
    acc = _count_vector(head, m, budget)
    tail = _count_vector(last, m, budget)
    out = [0] * n
    for i, ai in enumerate(acc):
        if ai:
            for j, bj in enumerate(tail):
                if bj:
                    out[(i + j) % n] += ai * bj
    return tuple(out)


def convolve_naive(spec_l: LatticeSpec, spec_r: LatticeSpec, m: int, t,
                   budget: EnumBudget = DEFAULT_BUDGET) -> int:
    """Convolution count by direct summation over all residues s mod p^m."""
    if spec_l.p != spec_r.p:
        raise ValueError("lattices must share a prime")
    n = spec_l.p**m
    if n > budget.max_states:
        raise BudgetExceeded(n, budget.max_states)
    t = as_int(t) % n
    left = _count_vector(spec_l, m, budget)
    right = _count_vector(spec_r, m, budget)
    return sum(left[s] * right[(t - s) % n] for s in range(n))


def convolve_lattice(spec: LatticeSpec, m: int, t, budget: EnumBudget = DEFAULT_BUDGET) -> int:
    """Multi-block count, associating left: ((B1+B2)+B3)+..."""
    head, last = spec.head_and_last()
    return convolve_naive(head, last, m, t, budget)


def tail_valuation_sum(k: int) -> int:
    """Sum of v_2(u) over u mod 2^k with the convention v_2(0) = k.

    Exactly 2^(k-1-j) residues have valuation j < k, and u = 0 contributes
    k, which telescopes to 2^k - 1.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    total = k
    for j in range(k):
        total += j << (k - 1 - j)
    return total


def _dyadic_classes(width: int):
    """(valuation, unit mod 8, size, offset-rep, step) classes of Z/2^width.

    Partitions the nonzero residues; the zero residue is not yielded.
    Classes of size > 1 are arithmetic progressions rep + i*step.
    """
    for j in range(width):
        span = width - j
        if span >= 3:
            for omega in (1, 3, 5, 7):
                yield j, omega, 1 << (span - 3), omega << j, 1 << (j + 3)
        else:
            for xi in range(1, 1 << span, 2):
                yield j, xi % 8, 1, xi << j, 0


def convolve_stratified(spec_l: LatticeSpec, spec_r: LatticeSpec, m: int, t,
                        budget: EnumBudget = DEFAULT_BUDGET) -> StratifiedConvolution:
    """Stratified convolution: O(m) strata instead of a p^m-term sum.

    Per-residue counts are taken at representatives and multiplied by the
    stratum size; a second member of every non-singleton stratum is checked
    so that non-constancy cannot pass silently.
    """
    if spec_l.p != spec_r.p:
        raise ValueError("lattices must share a prime")
    p = spec_l.p
    t = as_int(t)
    if t == 0:
        raise StratifiedRefusal("no stable stratification for singular target t=0")
    w = valuation(p, t)
    required = 1 + max(
        block_stable_threshold(b, p, w)
        for b in spec_l.blocks + spec_r.blocks
    )
    if m < required:
        raise StratifiedRefusal(
            f"level {m} below stable threshold {required}; use convolve_naive"
        )

    n = p**m
    t_red = t % n

    def f_left(s: int) -> int:
        return count_lattice(spec_l, m, s, budget)

    def f_right(s: int) -> int:
        return count_lattice(spec_r, m, (t_red - s) % n, budget)

    strata = []

    def add(region, val, unit_class, size, rep, witnesses):
        left = f_left(rep)
        right = f_right(rep)
        for other in witnesses:
            if f_left(other) != left or f_right(other) != right:
                raise ArithmeticError(
                    f"stratum constancy violated at s={rep} vs s={other} "
                    f"(region={region}, valuation={val})"
                )
        strata.append(
            Stratum(region, val, unit_class, size, rep, left, right)
        )

    if p == 2:
        # Residues split by v_2(s): below the cut (v < w), above it
        # (v > w, i.e. s = 0 mod 2^(w+1)), and the tail v = w, which is
        # exactly the progression s = t + 2^(w+1) u.
        for i, omega, size, rep, step in _dyadic_classes(m):
            if i == w:
                continue
            region = "below-cut" if i < w else "above-cut"
            witnesses = [rep + step] if size > 1 else []
            if size > 2:
                witnesses.append(rep + (size - 1) * step)
            add(region, i, omega, size, rep, witnesses)
        add("above-cut", m, None, 1, 0, [])
        k_t = m - w - 1
        shift = 1 << (w + 1)
        for j, nu, size, x0, xstep in _dyadic_classes(k_t):
            rep = (t_red + x0 * shift) % n
            witnesses = [(t_red + (x0 + xstep) * shift) % n] if size > 1 else []
            if size > 2:
                witnesses.append((t_red + (x0 + (size - 1) * xstep) * shift) % n)
            add("tail", j, nu, size, rep, witnesses)
        add("zero-offset", k_t, None, 1, t_red, [])
    else:
        tau = (t // p**w) % p
        for i in range(m):
            if i == w:
                # Non-tail part of the v = w stratum: units not congruent
                # to tau mod p, so v_p(t - s) stays exactly w.
                size = (p - 2) * p ** (m - i - 1)
                if size == 0:
                    continue
                sigma = next(x for x in range(1, p) if x != tau)
                rep = sigma * p**i
                witnesses = [(sigma + p) * p**i % n]
                extra = next((x for x in range(sigma + 1, p) if x != tau), None)
                if extra is not None:
                    witnesses.append(extra * p**i)
                region = "at-cut"
            else:
                size = (p - 1) * p ** (m - i - 1)
                rep = p**i
                witnesses = [2 * p**i % n, (1 + p) * p**i % n]
                region = "below-cut" if i < w else "above-cut"
            add(region, i, None, size, rep, [x for x in witnesses if x != rep])
        add("above-cut", m, None, 1, 0, [])
        k_t = m - w - 1
        shift = p ** (w + 1)
        for j in range(k_t):
            size = (p - 1) * p ** (k_t - j - 1)
            x0 = p**j
            rep = (t_red + x0 * shift) % n
            witnesses = [
                (t_red + 2 * x0 * shift) % n,
                (t_red + (1 + p) * x0 * shift) % n,
            ]
            add("tail", j, None, size, rep, [x for x in witnesses if x != rep])
        add("zero-offset", k_t, None, 1, t_red, [])

    total_classes = sum(s.class_count for s in strata)
    if total_classes != n:
        raise ArithmeticError(
            f"strata cover {total_classes} residues, expected {n}"
        )
    count = sum(s.contribution for s in strata)
    return StratifiedConvolution(count, tuple(strata))
