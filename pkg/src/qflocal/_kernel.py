"""Kernel selection: compiled extension when usable, pure Python otherwise.

The compiled kernels work on int64, so they are only eligible when every
intermediate provably fits (moduli at most 2^26 and small block dimension);
anything larger, or ``QFLOCAL_PURE=1`` in the environment, routes to the
big-int fallback with identical semantics.
"""

from __future__ import annotations

import os

from . import _purekernel

try:
    from . import _fastkernel
except ImportError:  # extension not built
    _fastkernel = None

FORCE_PURE = os.environ.get("QFLOCAL_PURE", "") == "1"
HAVE_FAST = _fastkernel is not None and not FORCE_PURE

_MOD_LIMIT = 1 << 26
_DIAG_DIM_LIMIT = 256  # keeps d * n_val below 2^35


def _fast_ok(c: int, n_coord: int, n_val: int, d: int = 1) -> bool:
    return (
        HAVE_FAST
        and n_coord <= _MOD_LIMIT
        and n_val <= _MOD_LIMIT
        and 0 <= c < max(n_val, 1)
        and d <= _DIAG_DIM_LIMIT
    )


def hist_diag(c: int, d: int, n_coord: int, n_val: int):
    if _fast_ok(c, n_coord, n_val, d):
        return _fastkernel.hist_diag(c, d, n_coord, n_val)
    return _purekernel.hist_diag(c, d, n_coord, n_val)


def hist_h0(c: int, n_coord: int, n_val: int):
    if _fast_ok(c, n_coord, n_val):
        return _fastkernel.hist_h0(c, n_coord, n_val)
    return _purekernel.hist_h0(c, n_coord, n_val)


def hist_h1(c: int, n_coord: int, n_val: int):
    if _fast_ok(c, n_coord, n_val):
        return _fastkernel.hist_h1(c, n_coord, n_val)
    return _purekernel.hist_h1(c, n_coord, n_val)
