# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled histogram kernels for the enumeration hot loops.

Semantics match qflocal._purekernel exactly; the dispatch layer only
routes here when every intermediate provably fits in int64:
``n_coord <= 2^26``, ``n_val <= 2^26``, ``0 <= c < n_val`` and
``d * n_val < 2^35``, so products stay below ``2^61``.
"""

from cpython cimport array
import array

_INT64_TEMPLATE = array.array('q', [])


cdef array.array _zeros(Py_ssize_t n):
    return array.clone(_INT64_TEMPLATE, n, zero=True)


def hist_diag(long long c, int d, long long n_coord, long long n_val):
    cdef array.array out = _zeros(n_val)
    cdef long long[::1] hist = out
    cdef array.array cq_arr = _zeros(n_coord)
    cdef long long[::1] cq = cq_arr
    cdef array.array dig_arr = _zeros(d)
    cdef long long[::1] digits = dig_arr
    cdef long long x, s, drop, old, top
    cdef int i

    for x in range(n_coord):
        cq[x] = (c * ((x * x) % n_val)) % n_val

    if d == 1:
        for x in range(n_coord):
            hist[cq[x]] += 1
        return out

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
            return out
        old = digits[i]
        digits[i] = old + 1
        s += cq[old + 1] - cq[old]


def hist_h0(long long c, long long n_coord, long long n_val):
    cdef array.array out = _zeros(n_val)
    cdef long long[::1] hist = out
    cdef long long x, y, a

    for x in range(n_coord):
        a = (c * x) % n_val
        for y in range(n_coord):
            hist[(a * y) % n_val] += 1
    return out


def hist_h1(long long c, long long n_coord, long long n_val):
    cdef array.array out = _zeros(n_val)
    cdef long long[::1] hist = out
    cdef long long x, y, xx

    for x in range(n_coord):
        xx = x * x
        for y in range(n_coord):
            hist[(c * ((xx + x * y + y * y) % n_val)) % n_val] += 1
    return out
