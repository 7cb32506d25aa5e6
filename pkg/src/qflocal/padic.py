"""p-adic valuation and unit-part bookkeeping on exact integers.

Counts are plain Python ints (arbitrary precision) and exact rationals are
``fractions.Fraction``; this module only adds the valuation layer on top.
The valuation of 0 is a distinguished sentinel object ``INFINITY``, never a
magic integer, so case splits on it stay explicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class _Infinity:
    """Singleton for the valuation of 0; larger than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("qflocal.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        if isinstance(other, (int, _Infinity)):
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _Infinity)):
            return True
        return NotImplemented


INFINITY = _Infinity()

Valuation = "int | _Infinity"


def is_finite(v) -> bool:
    return v is not INFINITY


# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10**24.
# Beyond that the same bases make the test a strong probable-prime check,
# which is far more than the small primes this library sees in practice.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test with fixed witness bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ensure_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"invalid prime: {p}")
    return p


def valuation(p: int, x: int):
    """Largest v with p^v | x, or INFINITY for x = 0."""
    ensure_prime(p)
    if x == 0:
        return INFINITY
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def residue_valuation(p: int, m: int, s: int) -> int:
    """Valuation of the residue class s mod p^m, clamped to m.

    Returns m exactly when s is divisible by p^m, so the result always
    lies in {0, ..., m}.
    """
    ensure_prime(p)
    if m < 1:
        raise ValueError(f"level must be >= 1, got {m}")
    s %= p**m
    if s == 0:
        return m
    v = 0
    while s % p == 0:
        s //= p
        v += 1
    return v


def unit_part(p: int, x: int) -> int:
    """The cofactor u in x = p^v * u with p coprime to u."""
    ensure_prime(p)
    if x == 0:
        raise ValueError("zero has no unit part")
    while x % p == 0:
        x //= p
    return x


@dataclass(frozen=True)
class Target:
    """An integer target t = p^v * u with its cached p-adic data.

    ``valuation`` is INFINITY and ``unit`` is None exactly when t = 0.
    Negative targets are allowed; only residue and valuation data is
    ever consumed downstream.
    """

    p: int
    t: int
    valuation: object = field(init=False)
    unit: object = field(init=False)

    def __post_init__(self):
        ensure_prime(self.p)
        object.__setattr__(self, "valuation", valuation(self.p, self.t))
        object.__setattr__(
            self, "unit", None if self.t == 0 else unit_part(self.p, self.t)
        )

    def residue(self, m: int) -> int:
        """The class of t in Z/p^m."""
        return self.t % self.p**m

    @property
    def is_zero(self) -> bool:
        return self.t == 0


def as_int(t) -> int:
    """Accept either a Target or a plain int as a target value."""
    if isinstance(t, Target):
        return t.t
    return int(t)
