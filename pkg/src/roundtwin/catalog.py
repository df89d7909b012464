"""Known Betti numbers of Q_n and M_n, and an Euler characteristic cross-check.

Q_n is glued from one copy of M_{n-1} and n-1 cylinders M_{n-2} x [-1, 1]
attached along both ends.  Each cylinder adds chi(M_{n-2}) and its two ends
subtract 2 chi(M_{n-2}), giving

    chi(Q_n) = chi(M_{n-1}) - (n - 1) chi(M_{n-2}).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .complex import SpaceSpec, enumerate_cells, top_dimension


@dataclass(frozen=True)
class KnownFact:
    space: SpaceSpec
    betti: tuple[int, ...]
    provenance: str

    def to_json(self) -> dict:
        return {"space": self.space.kind.value, "n": self.space.n,
                "betti": list(self.betti), "provenance": self.provenance}


@lru_cache(maxsize=1)
def known_facts() -> tuple[KnownFact, ...]:
    raw = json.loads(resources.files("roundtwin").joinpath("data/catalog.json").read_text())
    return tuple(KnownFact(SpaceSpec(f["space"], f["n"]), tuple(f["betti"]), f["provenance"])
                 for f in raw["facts"])


def expected_betti(space: SpaceSpec) -> tuple[int, ...] | None:
    """Catalogued Betti numbers, or None when the space is not pinned down."""
    for fact in known_facts():
        if fact.space == space:
            return fact.betti
    return None


def betti_match(expected, computed) -> bool:
    """Compare Betti vectors, padding the shorter with zeros."""
    m = max(len(expected), len(computed))
    return list(expected) + [0] * (m - len(expected)) == list(computed) + [0] * (m - len(computed))


def _chi(space: SpaceSpec) -> int:
    return sum((-1) ** k * len(enumerate_cells(space, k)) for k in range(top_dimension(space) + 1))


def euler_sides(n: int) -> tuple[int, int, int]:
    """(chi(Q_n), chi(M_{n-1}), chi(M_{n-2})) from enumerated cells."""
    if n < 3:
        raise ValueError("the gluing identity needs n >= 3")
    return _chi(SpaceSpec.round(n)), _chi(SpaceSpec.line(n - 1)), _chi(SpaceSpec.line(n - 2))


def euler_consistency(n: int) -> bool:
    q, m1, m2 = euler_sides(n)
    return q == m1 - (n - 1) * m2
