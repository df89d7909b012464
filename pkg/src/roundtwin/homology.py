"""Integral homology of cubical complexes via Smith normal form."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from . import _kernels
from .complex import CubicalComplex, signed_faces


class BoundaryError(RuntimeError):
    """The boundary of a boundary is not zero; the sign convention is broken."""


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    rank: int
    torsion: tuple[int, ...] = field(default=())

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def boundary_matrix(cx: CubicalComplex, k: int) -> np.ndarray:
    """The matrix of the k-th boundary map, rows and columns in canonical order."""
    if k < 1:
        raise ValueError(f"boundary degree must be at least 1, got {k}")
    rows = cx.cells[k - 1] if k - 1 < len(cx.cells) else ()
    cols = cx.cells[k] if k < len(cx.cells) else ()
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    idx = cx.local_index
    for j, c in enumerate(cols):
        for f, s in signed_faces(c):
            mat[idx[f], j] += s
    return mat


def check_boundary_squared(mats: list[np.ndarray]) -> None:
    """Raise BoundaryError unless consecutive boundary maps compose to zero."""
    for k in range(len(mats) - 1):
        a, b = mats[k], mats[k + 1]
        if a.size == 0 or b.size == 0:
            continue
        prod = sp.csr_matrix(a) @ sp.csr_matrix(b)
        if prod.count_nonzero():
            raise BoundaryError(f"boundary map {k + 1} composed with {k + 2} is nonzero")


def _snf_exact(rows: list[list[int]]) -> list[int]:
    """Diagonal of the Smith form, Python integers throughout."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
                    if abs(v) == 1:
                        break
            if best and abs(a[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        while True:
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if clean:
                break
            cands = [(i, t) for i in range(t, m) if a[i][t]] + [(t, j) for j in range(t + 1, n) if a[t][j]]
            best = min(cands, key=lambda ij: abs(a[ij[0]][ij[1]]))
        diag.append(abs(a[t][t]))
        t += 1
    # diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = math.gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag


def smith_normal_form(matrix, use_kernel: bool = True) -> SmithForm:
    """Smith normal form diagonal of an integer matrix.

    Matrices whose entries fit the int64 kernel are first stripped of unit
    pivots there; whatever remains is diagonalised exactly with minimal
    absolute value pivoting.
    """
    if isinstance(matrix, np.ndarray) and matrix.dtype != object:
        if not np.issubdtype(matrix.dtype, np.integer):
            raise TypeError(f"integer matrix required, got dtype {matrix.dtype}")
        rows = None
        arr = matrix
    else:
        rows = [[int(x) for x in r] for r in matrix]
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        arr = None
        if rows and use_kernel and all(abs(x) <= _kernels.BOUND for r in rows for x in r):
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    units = 0
    if arr is not None:
        if arr.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        if use_kernel and arr.size and np.abs(arr).max() <= _kernels.BOUND:
            units, resid = _kernels.eliminate_unit_pivots(arr)
            rows = resid.tolist()
        else:
            rows = arr.tolist()
    return SmithForm(tuple([1] * units + _snf_exact(rows)))


def homology(cx: CubicalComplex) -> list[HomologyGroup]:
    """H_0 .. H_top with integer coefficients."""
    top = cx.dimension
    mats = [boundary_matrix(cx, k) for k in range(1, top + 1)]
    check_boundary_squared(mats)
    forms = [smith_normal_form(m) for m in mats]
    ranks = [0] + [f.rank for f in forms] + [0]
    groups = []
    for k in range(top + 1):
        torsion = forms[k].torsion if k < len(forms) else ()
        groups.append(HomologyGroup(k, cx.counts[k] - ranks[k] - ranks[k + 1], torsion))
    return groups


def betti_numbers(groups: list[HomologyGroup]) -> list[int]:
    return [g.rank for g in groups]


def homology_report(cx: CubicalComplex, groups: list[HomologyGroup] | None = None) -> dict:
    if groups is None:
        groups = homology(cx)
    return {
        "space": cx.space.kind.value,
        "n": cx.space.n,
        "betti": [g.rank for g in groups],
        "torsion": [list(g.torsion) for g in groups],
        "euler": sum((-1) ** g.degree * g.rank for g in groups),
    }
