"""Dual cubical decompositions of the configuration spaces Q_n and M_n.

A cell is the combinatorial type of a configuration: an ordered sequence of
blocks (singletons or coinciding pairs) that partitions the labels 1..n.  On
the line (M_n) the blocks are read left to right along R.  On the circle
(Q_n) point n sits at infinity, so the last block is the one containing n and
every other block is read left to right along R.

The dimension of a cell is its number of pairs.  Splitting a pair into two
adjacent singletons gives a codimension-one face, so a k-cell is a k-cube.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

Block = tuple[int, ...]


class DomainError(ValueError):
    """Raised for inputs outside an operation's domain."""


class CellParseError(ValueError):
    """Raised when cell notation cannot be parsed."""


class Kind(str, enum.Enum):
    LINE = "line"
    ROUND = "round"


@dataclass(frozen=True)
class SpaceSpec:
    kind: Kind
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"number of points must be a positive integer, got {self.n!r}")

    @classmethod
    def round(cls, n: int) -> SpaceSpec:
        return cls(Kind.ROUND, n)

    @classmethod
    def line(cls, n: int) -> SpaceSpec:
        return cls(Kind.LINE, n)

    @property
    def is_round(self) -> bool:
        return self.kind is Kind.ROUND

    def __str__(self):
        return f"{'Q' if self.is_round else 'M'}{self.n}"


@dataclass(frozen=True)
class Cell:
    space: SpaceSpec
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        n = self.space.n
        seen = []
        for b in blocks:
            if len(b) not in (1, 2):
                raise DomainError(f"block {b} must have one or two labels")
            if len(b) == 2 and not b[0] < b[1]:
                raise DomainError(f"pair {b} must list distinct labels in increasing order")
            seen.extend(b)
        if sorted(seen) != list(range(1, n + 1)):
            raise DomainError(f"blocks {blocks} do not partition 1..{n}")
        if self.space.is_round and n not in blocks[-1]:
            raise DomainError(f"last block of a round cell must contain {n}")

    @property
    def dim(self) -> int:
        return sum(len(b) == 2 for b in self.blocks)

    @property
    def key(self) -> tuple:
        """Canonical sort key: blocks compared by (min label, max label)."""
        return tuple((b[0], b[-1]) for b in self.blocks)

    @property
    def pair_positions(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if len(b) == 2)

    def __str__(self):
        return format_cell(self)

    def __repr__(self):
        return f"Cell({self.space}, {format_cell(self)!r})"


def cell_order(cell: Cell) -> tuple:
    return (cell.dim, cell.key)


# -- counting ----------------------------------------------------------------

def cell_count_oracle(m: int, k: int) -> int:
    """Number of block sequences on m labels with exactly k pairs."""
    if m < 0 or k < 0:
        raise DomainError("m and k must be nonnegative")
    if 2 * k > m:
        return 0
    return math.factorial(m) * math.factorial(m - k) // (
        2**k * math.factorial(k) * math.factorial(m - 2 * k))


def expected_cell_count(space: SpaceSpec, k: int) -> int:
    n = space.n
    if not space.is_round:
        return cell_count_oracle(n, k)
    # point n alone at infinity, or paired with one of the other n - 1 labels
    paired = (n - 1) * cell_count_oracle(n - 2, k - 1) if k >= 1 and n >= 2 else 0
    return cell_count_oracle(n - 1, k) + paired


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _arrangements(labels: tuple[int, ...], k: int) -> tuple[tuple[Block, ...], ...]:
    if not labels:
        return ((),) if k == 0 else ()
    if 2 * k > len(labels):
        return ()
    out = []
    for a in labels:
        rest = tuple(x for x in labels if x != a)
        out.extend(((a,),) + tail for tail in _arrangements(rest, k))
    if k:
        for a, b in itertools.combinations(labels, 2):
            rest = tuple(x for x in labels if x != a and x != b)
            out.extend(((a, b),) + tail for tail in _arrangements(rest, k - 1))
    return tuple(out)


def enumerate_cells(space: SpaceSpec, k: int) -> list[Cell]:
    """All k-cells of the dual decomposition, in canonical order."""
    if not isinstance(space, SpaceSpec):
        raise DomainError(f"expected a SpaceSpec, got {space!r}")
    if k < 0:
        raise DomainError(f"dimension must be nonnegative, got {k}")
    n = space.n
    if not space.is_round:
        seqs = list(_arrangements(tuple(range(1, n + 1)), k))
    else:
        finite = tuple(range(1, n))
        seqs = [s + ((n,),) for s in _arrangements(finite, k)]
        if k >= 1:
            for a in finite:
                rest = tuple(x for x in finite if x != a)
                seqs.extend(s + ((a, n),) for s in _arrangements(rest, k - 1))
    cells = [Cell(space, s) for s in seqs]
    cells.sort(key=lambda c: c.key)
    return cells


def top_dimension(space: SpaceSpec) -> int:
    return space.n // 2


# -- faces and cofaces -------------------------------------------------------

def _split(cell: Cell, t: int, direction: int) -> Cell:
    """Split the t-th pair of ``cell`` (0-based, left to right)."""
    blocks = cell.blocks
    j = cell.pair_positions[t]
    a, b = blocks[j]
    if cell.space.is_round and j == len(blocks) - 1:
        # infinity pair: direction 0 sends a to the far left, 1 to the far right
        if direction == 0:
            new = ((a,),) + blocks[:-1] + ((b,),)
        else:
            new = blocks[:-1] + ((a,), (b,))
    else:
        halves = ((a,), (b,)) if direction == 0 else ((b,), (a,))
        new = blocks[:j] + halves + blocks[j + 1:]
    return Cell(cell.space, new)


def faces(cell: Cell) -> list[tuple[Cell, int, int]]:
    """Codimension-one faces as ``(face, pair_index, direction)``.

    Direction 1 puts the larger label of a finite pair on the left, and puts
    the freed label of the infinity pair at the right end of R.
    """
    return [(_split(cell, t, d), t, d) for t in range(cell.dim) for d in (0, 1)]


def signed_faces(cell: Cell) -> list[tuple[Cell, int]]:
    return [(face, (-1) ** t * (1 if d else -1)) for face, t, d in faces(cell)]


def _merges(cell: Cell) -> set[Cell]:
    blocks = cell.blocks
    space = cell.space
    finite = blocks[:-1] if space.is_round else blocks
    out = set()
    for i in range(len(finite) - 1):
        x, y = finite[i], finite[i + 1]
        if len(x) == 1 and len(y) == 1:
            pair = tuple(sorted(x + y))
            out.add(Cell(space, blocks[:i] + (pair,) + blocks[i + 2:]))
    if space.is_round and len(blocks[-1]) == 1 and finite:
        n = space.n
        # infinity is adjacent to both ends of R
        for end in {0, len(finite) - 1}:
            x = finite[end]
            if len(x) == 1:
                rest = finite[:end] + finite[end + 1:]
                out.add(Cell(space, rest + ((x[0], n),)))
    return out


def cofaces(cell: Cell, up_to: int | None = None) -> list[Cell]:
    """Cells of dimension dim+1..up_to having ``cell`` in their iterated boundary."""
    if up_to is None:
        up_to = cell.dim + 1
    found: set[Cell] = set()
    layer = {cell}
    for _ in range(cell.dim + 1, up_to + 1):
        layer = set().union(*(_merges(c) for c in layer)) if layer else set()
        found |= layer
    return sorted(found, key=cell_order)


def corner(cell: Cell, directions: tuple[int, ...]) -> Cell:
    """The vertex of the cube ``cell`` selected by one direction per pair."""
    for t in reversed(range(cell.dim)):
        cell = _split(cell, t, directions[t])
    return cell


def _edge_at_corner(cell: Cell, directions: tuple[int, ...], keep: int) -> Cell:
    for t in reversed(range(cell.dim)):
        if t != keep:
            cell = _split(cell, t, directions[t])
    return cell


# -- parsing -----------------------------------------------------------------

_COMPACT_TOKEN = re.compile(r"\((\d)(\d)\)|(\d)")
_GENERAL_TOKEN = re.compile(r"\(\s*(\d+)\s+(\d+)\s*\)|(\d+)")


def _tokenize(text: str) -> list[tuple[int, Block]]:
    general = any(ch.isspace() for ch in text.strip())
    pattern = _GENERAL_TOKEN if general else _COMPACT_TOKEN
    text = text.strip()
    pos = 0
    items = []
    while pos < len(text):
        if general and text[pos].isspace():
            pos += 1
            continue
        m = pattern.match(text, pos)
        if m is None:
            raise CellParseError(f"malformed block at position {pos}: {text[pos:]!r}")
        if m.group(3) is not None:
            items.append((pos, (int(m.group(3)),)))
        else:
            items.append((pos, (int(m.group(1)), int(m.group(2)))))
        pos = m.end()
    if not items:
        raise CellParseError("empty cell notation")
    return items


def parse_cell(text: str, kind: Kind | str = Kind.ROUND, n: int | None = None) -> Cell:
    """Parse compact (``2(13)5(46)``) or spaced (``2 (1 3) 5 (4 6)``) notation.

    ``n`` defaults to the largest label present.
    """
    kind = Kind(kind)
    items = _tokenize(text)
    seen = set()
    for pos, blk in items:
        for lab in blk:
            if lab in seen:
                raise CellParseError(f"repeated label {lab} in block at position {pos}")
            seen.add(lab)
    if n is None:
        n = max(seen)
    for pos, blk in items:
        for lab in blk:
            if not 1 <= lab <= n:
                raise CellParseError(f"label {lab} at position {pos} outside 1..{n}")
    missing = sorted(set(range(1, n + 1)) - seen)
    if missing:
        raise CellParseError(f"missing label {missing[0]}")
    if kind is Kind.ROUND and n not in items[-1][1]:
        raise CellParseError(f"final block at position {items[-1][0]} must contain {n}")
    return Cell(SpaceSpec(kind, n), tuple(tuple(sorted(blk)) for _, blk in items))


def format_cell(cell: Cell) -> str:
    if cell.space.n <= 9:
        return "".join(f"({b[0]}{b[1]})" if len(b) == 2 else str(b[0]) for b in cell.blocks)
    return " ".join(f"({b[0]} {b[1]})" if len(b) == 2 else str(b[0]) for b in cell.blocks)


# -- complexes ---------------------------------------------------------------

@dataclass(frozen=True)
class CubicalComplex:
    """Graded cells with signed face incidence.

    Cell ids are global: cells are numbered by dimension, then canonical
    order within a dimension.
    """

    space: SpaceSpec
    cells: tuple[tuple[Cell, ...], ...]

    @cached_property
    def ordered(self) -> tuple[Cell, ...]:
        return tuple(c for layer in self.cells for c in layer)

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: i for i, c in enumerate(self.ordered)}

    @cached_property
    def local_index(self) -> dict[Cell, int]:
        return {c: i for layer in self.cells for i, c in enumerate(layer)}

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.index

    def __len__(self):
        return len(self.ordered)

    def id_of(self, cell: Cell) -> int:
        return self.index[cell]

    @cached_property
    def coface_incidence(self) -> dict[Cell, dict[Cell, int]]:
        """For each cell, its codimension-one cofaces with face multiplicity."""
        inc: dict[Cell, dict[Cell, int]] = {c: {} for c in self.ordered}
        for c in self.ordered:
            for f, _, _ in faces(c):
                inc[f][c] = inc[f].get(c, 0) + 1
        return inc

    def validate(self) -> None:
        for k, layer in enumerate(self.cells):
            for c in layer:
                if c.space != self.space or c.dim != k:
                    raise DomainError(f"cell {c} misplaced in dimension {k}")
                for f, _, _ in faces(c):
                    if f not in self.index:
                        raise DomainError(f"face {f} of {c} missing from complex")
            if list(layer) != sorted(layer, key=lambda c: c.key):
                raise DomainError(f"dimension {k} cells not in canonical order")

    def subcomplex(self, cells: Iterable[Cell]) -> CubicalComplex:
        keep = set(cells)
        layers = [tuple(c for c in layer if c in keep) for layer in self.cells]
        while layers and not layers[-1]:
            layers.pop()
        sub = CubicalComplex(self.space, tuple(layers))
        sub.validate()
        return sub

    def to_json(self) -> dict:
        idx = self.index
        return {
            "space": self.space.kind.value,
            "n": self.space.n,
            "cells": [
                {"id": i, "dim": c.dim, "blocks": [list(b) for b in c.blocks]}
                for i, c in enumerate(self.ordered)
            ],
            "boundary": [
                {"cell": i, "faces": [{"cell": idx[f], "sign": s} for f, s in signed_faces(c)]}
                for i, c in enumerate(self.ordered) if c.dim > 0
            ],
        }


@lru_cache(maxsize=32)
def build_complex(space: SpaceSpec) -> CubicalComplex:
    layers = [tuple(enumerate_cells(space, k)) for k in range(top_dimension(space) + 1)]
    while layers and not layers[-1]:
        layers.pop()
    return CubicalComplex(space, tuple(layers))


def euler_characteristic(cx: CubicalComplex) -> int:
    return sum((-1) ** k * m for k, m in enumerate(cx.counts))


# -- vertex links ------------------------------------------------------------

@dataclass(frozen=True)
class VertexLink:
    """Link of a vertex in a cube complex.

    Link vertices are merge moves at the vertex, recorded as ``(edge,
    endpoint_direction)``; each cube cornered at the vertex contributes the
    simplex of its edges there.  ``simplicial`` is False when two corners
    give the same vertex set or a corner repeats a link vertex.
    """

    vertices: frozenset
    simplices: frozenset
    simplicial: bool = True


def vertex_link(vertex: Cell) -> VertexLink:
    if vertex.dim != 0:
        raise DomainError(f"{vertex} is not a vertex")
    verts = set()
    simplices = set()
    simplicial = True
    for cube in cofaces(vertex, top_dimension(vertex.space)):
        k = cube.dim
        for dirs in itertools.product((0, 1), repeat=k):
            if corner(cube, dirs) != vertex:
                continue
            simplex = frozenset(
                (_edge_at_corner(cube, dirs, t), dirs[t]) for t in range(k))
            if len(simplex) != k or simplex in simplices:
                simplicial = False
            simplices.add(simplex)
            if k == 1:
                verts |= simplex
    for s in simplices:
        simplices_sub = s - verts
        if simplices_sub:
            simplicial = False
    return VertexLink(frozenset(verts), frozenset(simplices), simplicial)


def is_flag(link: VertexLink) -> bool:
    """True iff every set of pairwise-joined link vertices spans a simplex."""
    if not link.simplicial:
        return False
    edges = {s for s in link.simplices if len(s) == 2}
    verts = sorted(link.vertices, key=repr)
    nbrs = {v: {w for e in edges if v in e for w in e if w != v} for v in verts}

    def cliques(current: list, candidates: list) -> Iterator[list]:
        for i, v in enumerate(candidates):
            clique = current + [v]
            yield clique
            yield from cliques(clique, [w for w in candidates[i + 1:] if w in nbrs[v]])

    return all(len(c) < 3 or frozenset(c) in link.simplices for c in cliques([], verts))
