import random

import pytest

from qflocal.lattice import (
    L3,
    LatticeError,
    LatticeParseError,
    LatticeSpec,
    ScaledH0,
    ScaledH1,
    TypeI,
    format_lattice,
    parse_lattice,
    q_value,
)


def test_parse_examples():
    spec = parse_lattice("H0 + <1>", 2)
    assert spec.blocks == (ScaledH0(0), TypeI(0, 1))
    assert spec.rank == 3

    spec = parse_lattice("2^1*H1", 2)
    assert spec.blocks == (ScaledH1(1),)
    assert spec.rank == 2

    spec = parse_lattice("<12>", 2)
    assert spec.blocks == (TypeI(2, 3),)


def test_parse_whitespace_and_odd_primes():
    assert parse_lattice("  3^2*H0 ", 3).blocks == (ScaledH0(2),)
    assert parse_lattice("<12>", 3).blocks == (TypeI(1, 4),)
    assert parse_lattice("<-8>", 2).blocks == (TypeI(3, -1),)


def test_parse_errors():
    with pytest.raises(LatticeParseError, match="degenerate block"):
        parse_lattice("<0>", 2)
    with pytest.raises(LatticeParseError, match="block not valid at this prime"):
        parse_lattice("H1", 3)
    with pytest.raises(LatticeParseError, match="block not valid at this prime"):
        parse_lattice("L3", 5)
    with pytest.raises(LatticeParseError, match="scale base"):
        parse_lattice("3^1*H0", 2)
    with pytest.raises(LatticeParseError, match="cannot be scaled"):
        parse_lattice("2^1*L3", 2)
    with pytest.raises(LatticeParseError, match="expected block"):
        parse_lattice("H0 + ", 2)
    with pytest.raises(LatticeParseError, match="trailing input"):
        parse_lattice("H0 junk", 2)
    err = None
    try:
        parse_lattice("H0 + <0>", 2)
    except LatticeParseError as exc:
        err = exc
    assert err is not None and err.offset == 5


def test_spec_validation():
    with pytest.raises(LatticeError, match="at least one block"):
        LatticeSpec(2, ())
    with pytest.raises(LatticeError, match="not valid at this prime"):
        LatticeSpec(3, (ScaledH1(0),))
    with pytest.raises(LatticeError, match="coprime"):
        LatticeSpec(2, (TypeI(0, 4),))


def _random_spec(rng):
    p = rng.choice([2, 2, 3, 5])
    blocks = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.randrange(4 if p == 2 else 2)
        if kind == 0:
            blocks.append(ScaledH0(rng.randint(0, 3)))
        elif kind == 1:
            u = rng.choice([u for u in range(-9, 10) if u and u % p])
            blocks.append(TypeI(rng.randint(0, 3), u))
        elif kind == 2:
            blocks.append(ScaledH1(rng.randint(0, 3)))
        else:
            blocks.append(L3())
    return LatticeSpec(p, tuple(blocks))


def test_parse_inverts_formatter():
    rng = random.Random(21)
    for _ in range(300):
        spec = _random_spec(rng)
        assert parse_lattice(format_lattice(spec), spec.p) == spec


def test_q_value_examples():
    assert q_value(parse_lattice("H0", 2), 3, (1, 1)) == 2
    assert q_value(parse_lattice("H1", 2), 3, (1, 1)) == 6
    assert q_value(parse_lattice("L3", 2), 4, (1, 2, 3)) == 12


def test_q_value_dimension_mismatch():
    with pytest.raises(LatticeError, match="dimension mismatch"):
        q_value(parse_lattice("H0", 2), 2, (1, 2, 3))


def test_q_value_orthogonality():
    rng = random.Random(22)
    for _ in range(200):
        left = _random_spec(rng)
        right = _random_spec(rng)
        if left.p != right.p:
            continue
        p = left.p
        m = rng.randint(1, 4)
        both = LatticeSpec(p, left.blocks + right.blocks)
        v = [rng.randrange(p**m) for _ in range(left.rank)]
        w = [rng.randrange(p**m) for _ in range(right.rank)]
        assert q_value(both, m, v + w) == (
            q_value(left, m, v) + q_value(right, m, w)
        ) % p**m


def test_even_blocks_take_even_values():
    rng = random.Random(23)
    even_blocks = [ScaledH0(0), ScaledH0(2), ScaledH1(0), ScaledH1(1), L3(), TypeI(1, 3), TypeI(2, -5)]
    for block in even_blocks:
        spec = LatticeSpec(2, (block,))
        for m in range(1, 5):
            for _ in range(50):
                v = [rng.randrange(2**m) for _ in range(spec.rank)]
                assert q_value(spec, m, v) % 2 == 0
        assert spec.is_even()
    assert not LatticeSpec(2, (TypeI(0, 1),)).is_even()
