"""Closed-form finite-level counts for the basic blocks.

The counting problems, with N(...) below always meaning the number of
solutions in the stated quotient:

* hyperbolic plane, any prime:   2 p^e x y = s (mod p^m)
* anisotropic even plane, p = 2: 2^(e+1)(x^2 + x y + y^2) = t (mod 2^m)
* rank-one Type I, p = 2:        2^a u x^2 = t (mod 2^m), via square-root
  counts modulo powers of two
* diagonal sums of squares:      x_1^2 + ... + x_d^2 = a (mod 2^n)
* L3 = <2> + <2> + <2>:          reduces to three squares one level down

Scaling exponents only shift levels while m stays above them; the tiny
regime m <= e (or m <= a) is served by the enumeration oracle instead of
extrapolated formulas.
"""

from __future__ import annotations

from typing import NamedTuple

from . import oracle
from .lattice import L3, LatticeSpec, ScaledH0, ScaledH1, TypeI, single
from .oracle import DEFAULT_BUDGET, EnumBudget
from .padic import as_int, ensure_prime, residue_valuation


def _require_level(m: int):
    if m < 1:
        raise ValueError(f"level must be >= 1, got {m}")


def _m_unscaled(p: int, m: int, s: int) -> int:
    """Solutions of 2xy = s (mod p^m) for the unscaled hyperbolic plane."""
    v = residue_valuation(p, m, s)
    if p == 2:
        if v == 0:
            return 0
        if v == m:
            return (m + 1) << m
        return v << m
    if v == m:
        return (m * (p - 1) + p) * p ** (m - 1)
    return (v + 1) * (p - 1) * p ** (m - 1)


def count_h0(p: int, e: int, m: int, s) -> int:
    """Solutions of 2 p^e x y = s (mod p^m) over (Z/p^m)^2."""
    ensure_prime(p)
    _require_level(m)
    if e < 0:
        raise ValueError(f"scale must be >= 0, got {e}")
    s = as_int(s)
    if m <= e:
        return oracle.count_enumerate(single(ScaledH0(e), p), m, s)
    if e == 0:
        return _m_unscaled(p, m, s)
    if residue_valuation(p, m, s) < e:
        return 0
    s_e = (s % p**m) // p**e
    return p ** (2 * e) * _m_unscaled(p, m - e, s_e)


def _a_unscaled(m: int, t: int) -> int:
    """Solutions of 2(x^2 + xy + y^2) = t (mod 2^m)."""
    v = residue_valuation(2, m, t)
    if v == m:
        return 1 << (2 * ((m + 1) // 2))  # 4^ceil(m/2)
    if v % 2 == 1:
        return 3 << m
    return 0


def count_h1(e: int, m: int, t) -> int:
    """Solutions of 2^(e+1)(x^2 + xy + y^2) = t (mod 2^m) over (Z/2^m)^2."""
    _require_level(m)
    if e < 0:
        raise ValueError(f"scale must be >= 0, got {e}")
    t = as_int(t)
    if m <= e:
        return oracle.count_enumerate(single(ScaledH1(e), 2), m, t)
    if residue_valuation(2, m, t) < e:
        return 0
    t_e = (t % (1 << m)) >> e
    return (1 << (2 * e)) * _a_unscaled(m - e, t_e)


def sqrt_count_mod2(m: int, b) -> int:
    """Number of x mod 2^m with x^2 = b (mod 2^m).

    For b = 2^(2j) c with c odd and k = m - 2j: one solution class scaled
    by 2^j when k = 1; solvable iff c = 1 (mod 4) when k = 2 and iff
    c = 1 (mod 8) when k >= 3.  An odd power of two in b admits no square
    roots, and b = 0 has 2^floor(m/2).
    """
    _require_level(m)
    b = as_int(b) % (1 << m)
    if b == 0:
        return 1 << (m // 2)
    v = residue_valuation(2, m, b)
    if v % 2 == 1:
        return 0
    j = v // 2
    c = b >> v
    k = m - v
    if k == 1:
        return 1 << j
    if k == 2:
        return (1 << (j + 1)) if c % 4 == 1 else 0
    return (1 << (j + 2)) if c % 8 == 1 else 0


def count_typeI(a: int, u: int, m: int, t) -> int:
    """Solutions of 2^a u x^2 = t (mod 2^m) over Z/2^m, for odd u."""
    _require_level(m)
    if a < 0:
        raise ValueError(f"scale must be >= 0, got {a}")
    if u % 2 == 0:
        raise ValueError(f"Type I unit must be odd, got {u}")
    t = as_int(t)
    if m <= a:
        return oracle.count_enumerate(single(TypeI(a, u), 2), m, t)
    if residue_valuation(2, m, t) < a:
        return 0
    k = m - a
    t_a = (t % (1 << m)) >> a
    u_inv = pow(u, -1, 1 << k)
    return (1 << a) * sqrt_count_mod2(k, (u_inv * t_a) % (1 << k))


_N3_TABLE = {0: 32, 1: 96, 2: 96, 3: 64, 4: 32, 5: 96, 6: 96, 7: 0}


def n3_mod8(a) -> int:
    """Three-squares count modulo 8: N(a) for x^2+y^2+z^2 = a (mod 8)."""
    return _N3_TABLE[as_int(a) % 8]


class SumSquaresDecomp(NamedTuple):
    """a = 4^k * a0 with 4 not dividing a0 (a must be nonzero)."""

    k: int
    a0: int


def decompose_pow4(a: int) -> SumSquaresDecomp:
    if a == 0:
        raise ValueError("cannot strip 4-powers from zero")
    k = 0
    while a % 4 == 0:
        a //= 4
        k += 1
    return SumSquaresDecomp(k, a)


class SumSquaresCount(NamedTuple):
    count: int
    route: str  # "closed-form" | "stable-recursion" | "enumeration"


def sum_squares_count(d: int, n: int, a, budget: EnumBudget = DEFAULT_BUDGET) -> SumSquaresCount:
    """Count solutions of x_1^2+...+x_d^2 = a (mod 2^n), recording the route.

    Routes, cheapest valid first:

    * d = 3, a != 0, n >= 2k+3 for a = 4^k a0: the stable closed form
      8^k * N(a0 mod 8) * 4^(n-2k-3).
    * other d, 4 not dividing a, n >= 3: enumerate the base level n = 3,
      then grow by the stable lifting factor 2^(d-1) per level.
    * everything else (a = 0, small n, or 4 | a with d != 3): enumeration
      only; no closed form is claimed there.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    a = as_int(a)
    if n == 0:
        return SumSquaresCount(1, "closed-form")
    if a != 0:
        k, a0 = decompose_pow4(a)
        if d == 3 and n >= 2 * k + 3:
            count = 8**k * n3_mod8(a0) * 4 ** (n - 2 * k - 3)
            return SumSquaresCount(count, "closed-form")
        if d != 3 and k == 0 and n >= 3:
            base = oracle.count_sum_squares_enumerate(d, 3, a, budget)
            return SumSquaresCount(base << ((d - 1) * (n - 3)), "stable-recursion")
    return SumSquaresCount(
        oracle.count_sum_squares_enumerate(d, n, a, budget), "enumeration"
    )


def count_sum_squares(d: int, n: int, a, budget: EnumBudget = DEFAULT_BUDGET) -> int:
    return sum_squares_count(d, n, a, budget).count


def count_l3(m: int, t, budget: EnumBudget = DEFAULT_BUDGET) -> int:
    """Solutions of 2(x^2+y^2+z^2) = t (mod 2^m) over (Z/2^m)^3.

    Odd targets are unrepresentable; even targets reduce to the
    three-squares count one level down with a fibre factor of 8.
    """
    _require_level(m)
    t = as_int(t)
    if t % 2 != 0:
        return 0
    return 8 * count_sum_squares(3, m - 1, t // 2, budget)


class LatticeCount(NamedTuple):
    count: int
    provenance: str  # "closed-form" | "convolution" | "enumeration"


def count_lattice_info(spec: LatticeSpec, m: int, t,
                       budget: EnumBudget = DEFAULT_BUDGET) -> LatticeCount:
    """Dispatch a lattice count to its closed form, with provenance.

    Single blocks use the block-specific closed forms (falling back to
    enumeration below the scaling level, and for rank-one blocks at odd
    primes, where no closed form is available).  Orthogonal sums are
    finite convolutions of per-block counts.
    """
    _require_level(m)
    t = as_int(t)
    if len(spec.blocks) > 1:
        from . import compose

        return LatticeCount(compose.convolve_lattice(spec, m, t, budget), "convolution")
    block = spec.blocks[0]
    if isinstance(block, ScaledH0):
        value = count_h0(spec.p, block.e, m, t)
        return LatticeCount(value, "enumeration" if m <= block.e else "closed-form")
    if isinstance(block, ScaledH1):
        value = count_h1(block.e, m, t)
        return LatticeCount(value, "enumeration" if m <= block.e else "closed-form")
    if isinstance(block, TypeI):
        if spec.p != 2:
            return LatticeCount(oracle.count_enumerate(spec, m, t, budget), "enumeration")
        value = count_typeI(block.a, block.u, m, t)
        return LatticeCount(value, "enumeration" if m <= block.a else "closed-form")
    if isinstance(block, L3):
        if t % 2 != 0:
            return LatticeCount(0, "closed-form")
        inner = sum_squares_count(3, m - 1, t // 2, budget)
        return LatticeCount(8 * inner.count, inner.route)
    raise TypeError(f"unknown block: {block!r}")


def count_lattice(spec: LatticeSpec, m: int, t, budget: EnumBudget = DEFAULT_BUDGET) -> int:
    return count_lattice_info(spec, m, t, budget).count
