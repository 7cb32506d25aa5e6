"""Block algebra for quadratic lattices over Z_p.

A lattice is an ordered orthogonal sum of basic blocks:

* ``ScaledH0(e)``  -- split even plane, Gram p^e*[[0,1],[1,0]], Q = 2 p^e x y
* ``ScaledH1(e)``  -- anisotropic even plane (p = 2 only), Q = 2^(e+1)(x^2+xy+y^2)
* ``TypeI(a, u)``  -- rank one, Gram [p^a u] with p coprime to u, Q = p^a u x^2
* ``L3``           -- <2> + <2> + <2> (p = 2 only), Q = 2(x1^2+x2^2+x3^2)

Text specs follow the grammar::

    lattice := block ("+" block)*
    block   := [scale "*"] base
    scale   := INT "^" INT          (scale base must equal the ambient prime)
    base    := "H0" | "H1" | "L3" | "<" SIGNED_INT ">"

with insignificant whitespace, e.g. ``"H0 + <1>"``, ``"2^1*H1"``, ``"3^2*H0"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .padic import ensure_prime, unit_part, valuation


@dataclass(frozen=True)
class ScaledH0:
    e: int = 0

    def rank(self) -> int:
        return 2


@dataclass(frozen=True)
class ScaledH1:
    e: int = 0

    def rank(self) -> int:
        return 2


@dataclass(frozen=True)
class TypeI:
    a: int
    u: int

    def rank(self) -> int:
        return 1


@dataclass(frozen=True)
class L3:
    def rank(self) -> int:
        return 3


Block = "ScaledH0 | ScaledH1 | TypeI | L3"


class LatticeError(ValueError):
    pass


def _validate_block(block, p: int):
    if isinstance(block, ScaledH0):
        if block.e < 0:
            raise LatticeError(f"negative scale exponent: {block.e}")
    elif isinstance(block, (ScaledH1, L3)):
        if p != 2:
            raise LatticeError(
                f"block not valid at this prime: {type(block).__name__} needs p=2, got p={p}"
            )
        if isinstance(block, ScaledH1) and block.e < 0:
            raise LatticeError(f"negative scale exponent: {block.e}")
    elif isinstance(block, TypeI):
        if block.a < 0:
            raise LatticeError(f"negative scale exponent: {block.a}")
        if block.u == 0 or block.u % p == 0:
            raise LatticeError(f"Type I unit {block.u} is not coprime to {p}")
    else:
        raise LatticeError(f"unknown block: {block!r}")


@dataclass(frozen=True)
class LatticeSpec:
    """Ordered orthogonal sum of blocks at a fixed prime."""

    p: int
    blocks: tuple

    def __post_init__(self):
        ensure_prime(self.p)
        if not self.blocks:
            raise LatticeError("lattice needs at least one block")
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for block in self.blocks:
            _validate_block(block, self.p)

    @property
    def rank(self) -> int:
        return sum(b.rank() for b in self.blocks)

    def is_even(self) -> bool:
        """True when Q(L) lands in 2 Z_2 (only meaningful at p = 2)."""
        if self.p != 2:
            return False
        return all(
            not isinstance(b, TypeI) or b.a >= 1 for b in self.blocks
        )

    def head_and_last(self):
        """Split off the final block; the head keeps the written order."""
        if len(self.blocks) < 2:
            raise LatticeError("need at least two blocks to split")
        head = LatticeSpec(self.p, self.blocks[:-1])
        last = LatticeSpec(self.p, self.blocks[-1:])
        return head, last

    def __str__(self) -> str:
        return format_lattice(self)


def single(block, p: int) -> LatticeSpec:
    return LatticeSpec(p, (block,))


# --- text format -----------------------------------------------------------


class LatticeParseError(LatticeError):
    """Syntax or validity error, carrying the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def expect(self, ch: str):
        if self.peek() != ch:
            raise LatticeParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise LatticeParseError("expected integer", start)
        return int(self.text[start : self.pos])


def _parse_block(sc: _Scanner, p: int):
    sc.skip_ws()
    start = sc.pos
    ch = sc.peek()
    scale = 0
    if ch.isdigit():
        base = sc.integer()
        sc.expect("^")
        scale = sc.integer()
        if base != p:
            raise LatticeParseError(
                f"scale base {base} does not match ambient prime {p}", start
            )
        if scale < 0:
            raise LatticeParseError("negative scale exponent", start)
        sc.expect("*")
        ch = sc.peek()
        start = sc.pos

    if ch == "H":
        word = sc.text[sc.pos : sc.pos + 2]
        if word == "H0":
            sc.pos += 2
            return ScaledH0(scale)
        if word == "H1":
            if p != 2:
                raise LatticeParseError("block not valid at this prime: H1 needs p=2", start)
            sc.pos += 2
            return ScaledH1(scale)
        raise LatticeParseError("expected block", start)
    if ch == "L":
        if sc.text[sc.pos : sc.pos + 2] == "L3":
            if p != 2:
                raise LatticeParseError("block not valid at this prime: L3 needs p=2", start)
            if scale != 0:
                raise LatticeParseError("L3 cannot be scaled", start)
            sc.pos += 2
            return L3()
        raise LatticeParseError("expected block", start)
    if ch == "<":
        sc.expect("<")
        c = sc.integer(signed=True)
        sc.expect(">")
        if c == 0:
            raise LatticeParseError("degenerate block <0>", start)
        c *= p**scale
        a = valuation(p, c)
        return TypeI(a, unit_part(p, c))
    raise LatticeParseError("expected block", start)


def parse_lattice(text: str, p: int) -> LatticeSpec:
    """Parse a lattice spec string at the given prime."""
    ensure_prime(p)
    sc = _Scanner(text)
    blocks = [_parse_block(sc, p)]
    while sc.peek() == "+":
        sc.expect("+")
        blocks.append(_parse_block(sc, p))
    sc.skip_ws()
    if sc.pos != len(text):
        raise LatticeParseError("trailing input", sc.pos)
    return LatticeSpec(p, tuple(blocks))


def format_block(block, p: int) -> str:
    if isinstance(block, ScaledH0):
        return "H0" if block.e == 0 else f"{p}^{block.e}*H0"
    if isinstance(block, ScaledH1):
        return "H1" if block.e == 0 else f"{p}^{block.e}*H1"
    if isinstance(block, TypeI):
        # The exact integer p^a*u is printed, never a reduced unit class,
        # so parse_lattice(format_lattice(L)) == L.
        return f"<{p ** block.a * block.u}>"
    if isinstance(block, L3):
        return "L3"
    raise LatticeError(f"unknown block: {block!r}")


def format_lattice(spec: LatticeSpec) -> str:
    return " + ".join(format_block(b, spec.p) for b in spec.blocks)


# --- quadratic form evaluation ----------------------------------------------


def block_q(block, p: int, coords) -> int:
    """Exact (unreduced) Q-value of one block on its own coordinates."""
    if isinstance(block, ScaledH0):
        x, y = coords
        return 2 * p**block.e * x * y
    if isinstance(block, ScaledH1):
        x, y = coords
        return 2 ** (block.e + 1) * (x * x + x * y + y * y)
    if isinstance(block, TypeI):
        (x,) = coords
        return p**block.a * block.u * x * x
    if isinstance(block, L3):
        x, y, z = coords
        return 2 * (x * x + y * y + z * z)
    raise LatticeError(f"unknown block: {block!r}")


def q_value(spec: LatticeSpec, m: int, vec) -> int:
    """Q(v) mod p^m for a coordinate vector over Z/p^m.

    The vector length must equal the lattice rank; coordinates are split
    across the blocks in written order.
    """
    vec = tuple(vec)
    if len(vec) != spec.rank:
        raise LatticeError(
            f"dimension mismatch: got {len(vec)} coordinates for rank {spec.rank}"
        )
    mod = spec.p**m
    total = 0
    i = 0
    for block in spec.blocks:
        r = block.rank()
        total += block_q(block, spec.p, vec[i : i + r])
        i += r
    return total % mod
