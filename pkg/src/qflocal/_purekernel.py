"""Pure-Python histogram kernels (big-int safe fallback).

Each function enumerates every coordinate tuple of one block shape and
tallies the value of its quadratic form.  ``n_coord`` is the coordinate
modulus, ``n_val`` the value modulus (``n_val`` is either ``n_coord`` or,
for half-normalisation counts, ``2 * n_coord``).  The coefficient ``c``
must already be reduced into ``[0, n_val)``.

These loops are deliberately the dumbest possible evaluation of the form;
the compiled kernel in ``_fastkernel.pyx`` mirrors them operation for
operation and is cross-checked in the test suite.
"""

from __future__ import annotations


def hist_diag(c: int, d: int, n_coord: int, n_val: int) -> list[int]:
    """Histogram of c*(x_1^2 + ... + x_d^2) mod n_val over (Z/n_coord)^d."""
    hist = [0] * n_val
    cq = [(c * (x * x)) % n_val for x in range(n_coord)]
    if d == 1:
        for v in cq:
            hist[v] += 1
        return hist
    digits = [0] * d
    s = 0
    top = n_coord - 1
    drop = cq[top]
    while True:
        hist[s % n_val] += 1
        i = 0
        while i < d and digits[i] == top:
            digits[i] = 0
            s -= drop
            i += 1
        if i == d:
            return hist
        old = digits[i]
        digits[i] = old + 1
        s += cq[old + 1] - cq[old]


def hist_h0(c: int, n_coord: int, n_val: int) -> list[int]:
    """Histogram of c*x*y mod n_val over (Z/n_coord)^2."""
    hist = [0] * n_val
    for x in range(n_coord):
        a = (c * x) % n_val
        for y in range(n_coord):
            hist[(a * y) % n_val] += 1
    return hist


def hist_h1(c: int, n_coord: int, n_val: int) -> list[int]:
    """Histogram of c*(x^2 + x*y + y^2) mod n_val over (Z/n_coord)^2."""
    hist = [0] * n_val
    for x in range(n_coord):
        xx = x * x
        for y in range(n_coord):
            hist[(c * ((xx + x * y + y * y) % n_val)) % n_val] += 1
    return hist
