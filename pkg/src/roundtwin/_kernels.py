"""Unit-pivot elimination on int64 matrices.

Both kernels repeatedly pick an entry equal to +1 or -1, clear its column by
row operations and drop its row and column.  Every step is a unimodular
equivalence, so the Smith form of the input is ``[1] * pivots`` followed by
the Smith form of the residual block.

Entries stay below ``BOUND`` in absolute value between steps, which keeps
every product below 2**62; a step that pushes an entry past the bound stops
the kernel and the residual is finished with Python integers.

Set ``ROUNDTWIN_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

BOUND = 2**31

_disabled = os.environ.get("ROUNDTWIN_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    from numba import njit
except ImportError:
    njit = None

USING_NUMBA = njit is not None


def _eliminate_py(a: np.ndarray, bound: int = BOUND) -> tuple[int, bool]:
    """Numpy implementation; ``a`` is modified in place."""
    rows, cols = a.shape
    r = 0
    while r < rows and r < cols:
        sub = a[r:, r:]
        first = np.flatnonzero(np.abs(sub[:, 0]) == 1)
        if first.size:
            pj, pi = r, first[0] + r
        else:
            hits = np.argwhere((sub == 1).T | (sub == -1).T)
            if hits.size == 0:
                return r, False
            pj, pi = hits[0] + r
        if pi != r:
            a[[r, pi]] = a[[pi, r]]
        if pj != r:
            a[:, [r, pj]] = a[:, [pj, r]]
        p = a[r, r]
        below = np.nonzero(a[r + 1:, r])[0] + r + 1
        if below.size:
            f = a[below, r] * p
            a[below, r + 1:] -= np.outer(f, a[r, r + 1:])
            a[below, r] = 0
            r += 1
            if np.abs(a[below, r:]).max(initial=0) > bound:
                return r, True
        else:
            r += 1
    return r, False


def _eliminate_jit_impl(a, bound):
    rows, cols = a.shape
    r = 0
    while r < rows and r < cols:
        pi = -1
        pj = -1
        for j in range(r, cols):
            for i in range(r, rows):
                v = a[i, j]
                if v == 1 or v == -1:
                    pi = i
                    pj = j
                    break
            if pi >= 0:
                break
        if pi < 0:
            return r, False
        if pi != r:
            for j in range(cols):
                t = a[r, j]
                a[r, j] = a[pi, j]
                a[pi, j] = t
        if pj != r:
            for i in range(rows):
                t = a[i, r]
                a[i, r] = a[i, pj]
                a[i, pj] = t
        p = a[r, r]
        overflow = False
        for i in range(r + 1, rows):
            f = a[i, r]
            if f != 0:
                f *= p
                for j in range(r + 1, cols):
                    x = a[r, j]
                    if x != 0:
                        v = a[i, j] - f * x
                        a[i, j] = v
                        if v > bound or v < -bound:
                            overflow = True
                a[i, r] = 0
        r += 1
        if overflow:
            return r, True
    return r, False


_eliminate_jit = njit(cache=True)(_eliminate_jit_impl) if USING_NUMBA else None


def eliminate_unit_pivots(a: np.ndarray, use_numba: bool | None = None) -> tuple[int, np.ndarray]:
    """Return ``(pivots, residual)`` for a copy of the int64 matrix ``a``."""
    work = np.array(a, dtype=np.int64, copy=True, order="C")
    if use_numba is None:
        use_numba = USING_NUMBA
    if use_numba and _eliminate_jit is None:
        raise RuntimeError("numba kernel requested but numba is unavailable or disabled")
    if work.size == 0:
        return 0, work
    if use_numba:
        r, _ = _eliminate_jit(work, BOUND)
    else:
        r, _ = _eliminate_py(work, BOUND)
    return int(r), work[r:, r:]
