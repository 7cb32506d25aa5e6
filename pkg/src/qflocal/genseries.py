"""Rational generating series for the plane-count sequences.

A series is stored as an explicit initial segment (coefficients of
X^1..X^V) plus a rational-function tail num/den whose power-series
expansion vanishes through degree V, so the total coefficient at X^m is
``initial[m-1] + [X^m] num/den``.  X is formal throughout; coefficients
are exact rationals.

Polynomials are dense ascending coefficient lists over Fraction; degrees
here never exceed the target valuation plus two, so nothing sparse is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closed_counts import count_h0, count_h1
from .padic import INFINITY, ensure_prime, valuation


# --- dense polynomial helpers ------------------------------------------------


def _trim(poly):
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def poly(coeffs) -> tuple:
    return tuple(_trim([Fraction(c) for c in coeffs]))


ZERO = poly([0])
ONE = poly([1])


def poly_is_zero(a) -> bool:
    return all(c == 0 for c in a)


def poly_add(a, b) -> tuple:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return tuple(_trim(out))


def poly_mul(a, b) -> tuple:
    if poly_is_zero(a) or poly_is_zero(b):
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(_trim(out))


def poly_scale(a, c) -> tuple:
    c = Fraction(c)
    return tuple(_trim([x * c for x in a]))


def poly_shift(a, k: int) -> tuple:
    """Multiply by X^k."""
    if poly_is_zero(a):
        return ZERO
    return tuple([Fraction(0)] * k + list(a))


def poly_divmod(a, b):
    if poly_is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(rem) >= len(b) and not poly_is_zero(tuple(rem)):
        _trim(rem)
        if len(rem) < len(b):
            break
        factor = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        quot[shift] += factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    return tuple(_trim(quot)), tuple(_trim(rem))


def poly_gcd(a, b) -> tuple:
    """Monic polynomial gcd over the rationals."""
    a, b = tuple(a), tuple(b)
    while not poly_is_zero(b):
        _, r = poly_divmod(a, b)
        a, b = b, r
    if poly_is_zero(a):
        return ONE
    return poly_scale(a, Fraction(1) / a[-1])


def _normalise(num, den):
    """Reduce num/den by their gcd and scale so den has constant term 1."""
    if poly_is_zero(den):
        raise ZeroDivisionError("zero denominator")
    if poly_is_zero(num):
        return ZERO, ONE
    g = poly_gcd(num, den)
    if len(g) > 1:
        num, _ = poly_divmod(num, g)
        den, _ = poly_divmod(den, g)
    if den[0] == 0:
        raise ValueError("denominator must have nonzero constant term")
    scale = Fraction(1) / den[0]
    return poly_scale(num, scale), poly_scale(den, scale)


def _expand(num, den, order: int) -> list:
    """Power-series coefficients [X^0..X^order] of num/den (den[0] != 0)."""
    coeffs = []
    for k in range(order + 1):
        c = num[k] if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            c -= den[i] * coeffs[k - i]
        coeffs.append(c / den[0])
    return coeffs


# --- the series type ----------------------------------------------------------


@dataclass(frozen=True)
class RationalSeries:
    """Initial segment (X^1..X^V) plus a rational tail in normal form."""

    initial: tuple
    num: tuple
    den: tuple

    @classmethod
    def build(cls, initial, num, den) -> "RationalSeries":
        initial = tuple(Fraction(c) for c in initial)
        num, den = _normalise(poly(num), poly(den))
        series = cls(initial, num, den)
        # The tail must not reach into the explicitly stored segment.
        for k in range(1, len(initial) + 1):
            if series.tail_coefficient(k) != 0:
                raise ValueError(f"tail overlaps initial segment at degree {k}")
        return series

    def tail_coefficient(self, m: int) -> Fraction:
        return _expand(self.num, self.den, m)[m]

    def coefficient(self, m: int) -> Fraction:
        """Exact coefficient of X^m, m >= 1."""
        if m < 1:
            raise ValueError(f"coefficient index must be >= 1, got {m}")
        value = self.initial[m - 1] if m <= len(self.initial) else Fraction(0)
        return value + self.tail_coefficient(m)

    def coefficients(self, up_to: int) -> list:
        """Coefficients of X^1..X^up_to in one expansion pass."""
        tail = _expand(self.num, self.den, up_to)
        out = []
        for m in range(1, up_to + 1):
            base = self.initial[m - 1] if m <= len(self.initial) else Fraction(0)
            out.append(base + tail[m])
        return out

    def to_json(self) -> dict:
        def enc(seq):
            return [{"num": c.numerator, "den": c.denominator} for c in seq]

        return {"initial": enc(self.initial), "num": enc(self.num), "den": enc(self.den)}

    def __str__(self) -> str:
        return format_series(self)


def coefficient(series: RationalSeries, m: int) -> Fraction:
    return series.coefficient(m)


def _format_poly(p) -> str:
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            x = "X" if i == 1 else f"X^{i}"
            sign = "-" if c < 0 else "+"
            if not terms:
                terms.append(f"{'-' if c < 0 else ''}{mag}{x}")
            else:
                terms.append(f"{sign} {mag}{x}")
    return " ".join(terms) if terms else "0"


def format_series(series: RationalSeries) -> str:
    parts = []
    if series.initial and any(series.initial):
        parts.append(_format_poly(tuple([Fraction(0)] + list(series.initial))))
    if not poly_is_zero(series.num):
        parts.append(f"({_format_poly(series.num)}) / ({_format_poly(series.den)})")
    if not parts:
        return "0"
    return "  +  ".join(parts)


# --- the hyperbolic and anisotropic series ------------------------------------


def series_h0(p: int, e: int, s) -> RationalSeries:
    """Generating series of the scaled hyperbolic counts in levels m >= 1.

    For e = 0 this is the exact closed decomposition: a polynomial
    segment through degree v plus a geometric tail.  For e > 0 the
    coefficients at m <= e come from the enumeration fallback and the rest
    is the e-fold level shift scaled by p^(2e).
    """
    ensure_prime(p)
    if e < 0:
        raise ValueError(f"scale must be >= 0, got {e}")
    s = int(s)
    if e == 0:
        return _series_h0_unscaled(p, s)

    head = [Fraction(count_h0(p, e, m, s)) for m in range(1, e + 1)]
    v = valuation(p, s)
    if v is not INFINITY and v < e:
        return RationalSeries.build(head, ZERO, ONE)
    inner = _series_h0_unscaled(p, s // p**e)
    scale = Fraction(p ** (2 * e))
    initial = head + [scale * c for c in inner.initial]
    num = poly_shift(poly_scale(inner.num, scale), e)
    return RationalSeries.build(initial, num, inner.den)


def _series_h0_unscaled(p: int, s: int) -> RationalSeries:
    if p == 2:
        if s == 0:
            # sum (m+1) 2^m X^m = 4X(1-X)/(1-2X)^2
            return RationalSeries.build([], poly([0, 4, -4]), poly([1, -4, 4]))
        v = valuation(2, s)
        if v == 0:
            return RationalSeries.build([], ZERO, ONE)
        initial = [Fraction((m + 1) << m) for m in range(1, v + 1)]
        num = poly_shift(poly([v << (v + 1)]), v + 1)
        return RationalSeries.build(initial, num, poly([1, -2]))
    if s == 0:
        # X(p/(1-pX) + (p-1)/(1-pX)^2) = X(2p-1 - p^2 X)/(1-pX)^2
        return RationalSeries.build([], poly([0, 2 * p - 1, -(p * p)]), poly([1, -2 * p, p * p]))
    v = valuation(p, s)
    initial = [Fraction(p ** (m - 1) * (p + (p - 1) * m)) for m in range(1, v + 1)]
    num = poly_shift(poly([(v + 1) * (p - 1) * p**v]), v + 1)
    return RationalSeries.build(initial, num, poly([1, -p]))


def series_h1(t) -> RationalSeries:
    """Generating series of the anisotropic even plane counts at p = 2."""
    t = int(t)
    if t == 0:
        # sum 4^ceil(m/2) X^m = 4X(1+X)/(1-4X^2)
        return RationalSeries.build([], poly([0, 4, 4]), poly([1, 0, -4]))
    v = valuation(2, t)
    initial = [Fraction(count_h1(0, m, t)) for m in range(1, v + 1)]
    if v % 2 == 1:
        num = poly_shift(poly([3 << (v + 1)]), v + 1)
        return RationalSeries.build(initial, num, poly([1, -2]))
    return RationalSeries.build(initial, ZERO, ONE)
