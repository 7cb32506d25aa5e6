"""Brute-force enumeration of Q(v) = t (mod p^m): the ground truth.

Every closed form in the library is tested against this module.  The
enumeration builds one value histogram per block (a direct sweep of the
block's own coordinate space) and convolves the histograms across blocks;
nothing cleverer than that is allowed here, so the results stay obviously
correct.  Budgets are hard errors, never silent truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .lattice import L3, LatticeSpec, ScaledH0, ScaledH1, TypeI
from .padic import as_int


@dataclass(frozen=True)
class EnumBudget:
    """Cap on the number of enumeration states the oracle may visit."""

    max_states: int = 1 << 26

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be >= 1")


DEFAULT_BUDGET = EnumBudget()


class BudgetExceeded(Exception):
    """Raised when an enumeration would visit more states than allowed."""

    def __init__(self, required: int, max_states: int):
        super().__init__(
            f"enumeration needs {required} states, budget allows {max_states}"
        )
        self.required = required
        self.max_states = max_states


def _check(required: int, budget: EnumBudget):
    if required > budget.max_states:
        raise BudgetExceeded(required, budget.max_states)


# Histograms are cached so that residue sweeps over one (block, level)
# cost a single enumeration.  Large rank-one histograms (up to 2^26 cells)
# are never retained; the cache keeps at most ~32 MB of small ones.
_HIST_CACHE: dict = {}
_HIST_ENTRY_LIMIT = 1 << 16
_HIST_TOTAL_LIMIT = 1 << 22
_hist_cached_cells = 0


def _block_histogram(block, p: int, m_coord: int, m_val: int):
    """Value histogram of one block over (Z/p^m_coord)^rank, values mod p^m_val.

    Callers must not mutate the returned buffer.
    """
    global _hist_cached_cells
    key = (block, p, m_coord, m_val)
    hit = _HIST_CACHE.get(key)
    if hit is not None:
        return hit
    n_coord = p**m_coord
    n_val = p**m_val
    if isinstance(block, ScaledH0):
        out = _kernel.hist_h0((2 * p**block.e) % n_val, n_coord, n_val)
    elif isinstance(block, ScaledH1):
        out = _kernel.hist_h1((2 ** (block.e + 1)) % n_val, n_coord, n_val)
    elif isinstance(block, TypeI):
        out = _kernel.hist_diag((p**block.a * block.u) % n_val, 1, n_coord, n_val)
    elif isinstance(block, L3):
        out = _kernel.hist_diag(2 % n_val, 3, n_coord, n_val)
    else:
        raise TypeError(f"unknown block: {block!r}")
    if n_val <= _HIST_ENTRY_LIMIT and _hist_cached_cells + n_val <= _HIST_TOTAL_LIMIT:
        _HIST_CACHE[key] = out
        _hist_cached_cells += n_val
    return out


def _cyclic_convolve(a, b, n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % n] += ai * bj
    return out


def _required_states(spec: LatticeSpec, m_coord: int, n_val: int) -> int:
    k = len(spec.blocks)
    required = sum(spec.p ** (m_coord * b.rank()) for b in spec.blocks)
    if k > 1:
        required += n_val
    if k > 2:
        required += (k - 2) * n_val * n_val
    return required


def _histogram_count(spec: LatticeSpec, m_coord: int, m_val: int, target: int,
                     budget: EnumBudget) -> int:
    n_val = spec.p**m_val
    _check(_required_states(spec, m_coord, n_val), budget)
    hists = [_block_histogram(b, spec.p, m_coord, m_val) for b in spec.blocks]
    target %= n_val
    if len(hists) == 1:
        return int(hists[0][target])
    acc = hists[0]
    for h in hists[1:-1]:
        acc = _cyclic_convolve(acc, h, n_val)
    last = hists[-1]
    return sum(
        int(acc[s]) * int(last[(target - s) % n_val]) for s in range(n_val)
    )


def count_enumerate(spec: LatticeSpec, m: int, t, budget: EnumBudget = DEFAULT_BUDGET) -> int:
    """#{v in (Z/p^m)^rank : Q(v) = t (mod p^m)}, by exhaustive enumeration."""
    if m < 1:
        raise ValueError(f"level must be >= 1, got {m}")
    return _histogram_count(spec, m, m, as_int(t), budget)


def count_q_enumerate(spec: LatticeSpec, m: int, t_prime,
                      budget: EnumBudget = DEFAULT_BUDGET) -> int:
    """Counts for the half form q = Q/2 at level p^m, by enumeration.

    At p = 2 the lattice must be even; q(v) = t' (mod 2^m) is then decided
    by evaluating Q modulo 2^(m+1) on coordinates modulo 2^m.  At odd
    primes 2 is a unit and the count equals the plain count at target 2t'.
    """
    if m < 1:
        raise ValueError(f"level must be >= 1, got {m}")
    t_prime = as_int(t_prime)
    if spec.p != 2:
        return count_enumerate(spec, m, (2 * t_prime) % spec.p**m, budget)
    if not spec.is_even():
        raise ValueError("q-normalisation requires an even lattice")
    return _histogram_count(spec, m, m + 1, 2 * t_prime, budget)


def count_sum_squares_enumerate(d: int, n: int, a, budget: EnumBudget = DEFAULT_BUDGET) -> int:
    """#{x in (Z/2^n)^d : x_1^2 + ... + x_d^2 = a (mod 2^n)}.

    For n = 0 the quotient ring is trivial and the count is 1.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    if n == 0:
        return 1
    _check((1 << n) ** d, budget)
    hist = _sum_squares_histogram(d, n)
    return int(hist[as_int(a) % (1 << n)])


def _sum_squares_histogram(d: int, n: int):
    global _hist_cached_cells
    key = ("sum-squares", d, n)
    hit = _HIST_CACHE.get(key)
    if hit is not None:
        return hit
    size = 1 << n
    out = _kernel.hist_diag(1 % size, d, size, size)
    if size <= _HIST_ENTRY_LIMIT and _hist_cached_cells + size <= _HIST_TOTAL_LIMIT:
        _HIST_CACHE[key] = out
        _hist_cached_cells += size
    return out
