"""Elementary free-face collapses of cubical complexes."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import Cell, CubicalComplex, faces


@dataclass(frozen=True)
class FreePair:
    free_cell: Cell
    coface: Cell


def _incidence(cx: CubicalComplex, alive: set[Cell]) -> dict[Cell, dict[Cell, int]]:
    inc = {c: {} for c in alive}
    for c in alive:
        for f, _, _ in faces(c):
            inc[f][c] = inc[f].get(c, 0) + 1
    return inc


def _is_free(cofaces: dict[Cell, int]) -> bool:
    # a face hit twice by its only coface (the circle Q_2) is not free
    return len(cofaces) == 1 and next(iter(cofaces.values())) == 1


def free_pairs(cx: CubicalComplex) -> list[FreePair]:
    """All free faces with their unique cofaces, by (dimension, coface id, face id)."""
    inc = cx.coface_incidence
    idx = cx.index
    pairs = [FreePair(f, next(iter(co))) for f, co in inc.items() if _is_free(co)]
    pairs.sort(key=lambda p: (p.coface.dim, idx[p.coface], idx[p.free_cell]))
    return pairs


def collapse_sequence(cx: CubicalComplex, strategy: str = "greedy-descending") -> list[FreePair]:
    """The free pairs removed, in execution order.

    Each step takes the highest coface dimension that still has a free pair
    and removes the pair with the smallest (coface id, face id) there.
    """
    if strategy != "greedy-descending":
        raise ValueError(f"unknown collapse strategy {strategy!r}")
    idx = cx.index
    alive = set(cx.ordered)
    inc = _incidence(cx, alive)
    log = []
    while True:
        best = None
        for d in range(cx.dimension, 0, -1):
            for f in cx.cells[d - 1]:
                if f in alive and _is_free(inc[f]):
                    co = next(iter(inc[f]))
                    key = (idx[co], idx[f])
                    if best is None or key < best[0]:
                        best = (key, f, co)
            if best is not None:
                break
        if best is None:
            return log
        _, f, co = best
        for g, _, _ in faces(co):
            inc[g].pop(co, None)
        del inc[f]
        for g, _, _ in faces(f):
            inc[g].pop(f, None)
        del inc[co]
        alive -= {f, co}
        log.append(FreePair(f, co))


def collapse(cx: CubicalComplex, strategy: str = "greedy-descending") -> CubicalComplex:
    removed = set()
    for p in collapse_sequence(cx, strategy):
        removed |= {p.free_cell, p.coface}
    return cx.subcomplex(c for c in cx.ordered if c not in removed)


def collapse_report(cx: CubicalComplex, strategy: str = "greedy-descending") -> dict:
    log = collapse_sequence(cx, strategy)
    removed = {c for p in log for c in (p.free_cell, p.coface)}
    out = cx.subcomplex(c for c in cx.ordered if c not in removed).to_json()
    out["log"] = [[cx.id_of(p.free_cell), cx.id_of(p.coface)] for p in log]
    return out
