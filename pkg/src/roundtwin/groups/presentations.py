"""Relator lists for the presentations and an audit against the maps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .maps import kappa, perm_image
from .solver import DEFAULT_MAX_NODES, SolverBudgetExceeded, cactus_is_trivial
from .words import AnnularWord, CactusWord, TwinWord, WordError

GROUPS = ("twin", "cactus", "annular")


def twin_relators(n: int) -> list[TwinWord]:
    s = lambda i: ("s", i)  # noqa: E731
    z, zi = ("z", 1), ("z", -1)
    rels = [TwinWord(n, (s(i), s(i))) for i in range(1, n)]
    rels += [TwinWord(n, (s(i), s(j), s(i), s(j)))
             for i in range(1, n) for j in range(i + 2, n)]
    rels += [TwinWord(n, (s(i), z, s(i + 1), zi)) for i in range(1, n - 1)]
    return rels


def cactus_relators(n: int) -> list[CactusWord]:
    gens = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    rels = [CactusWord(n, (x, x)) for x in gens]
    for x in gens:
        for y in gens:
            (p, q), (m, r) = x, y
            if x < y and (q < m or r < p):
                rels.append(CactusWord(n, (x, y, x, y)))
            elif x != y and p <= m and r <= q:
                rels.append(CactusWord(n, (x, y, x, (p + q - r, p + q - m))))
    return rels


def annular_relators(n: int) -> list[AnnularWord]:
    a = lambda i: ("a", i)  # noqa: E731
    h, hi = ("h", 1), ("h", -1)
    rels = [AnnularWord(n, (a(i), a(i))) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i - j - 1) % n and (i - j + 1) % n:
                rels.append(AnnularWord(n, (a(i), a(j), a(i), a(j))))
    rels += [AnnularWord(n, (a(i), h, a(i % n + 1), hi)) for i in range(1, n + 1)]
    return rels


def relators(group: str, n: int) -> list:
    if group == "twin":
        return twin_relators(n)
    if group == "cactus":
        return cactus_relators(n)
    if group == "annular":
        if n < 2:
            raise WordError("annular twin groups need n >= 2")
        return annular_relators(n)
    raise WordError(f"unknown group {group!r}")


@dataclass
class PresentationReport:
    group: str
    n: int
    relators: list
    failures: list[tuple[str, str]] = field(default_factory=list)
    kappa_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "relators": len(self.relators),
            "kappa_checked": self.kappa_checked,
            "failures": [{"relator": r, "reason": why} for r, why in self.failures],
            "ok": self.ok,
        }


def verify_presentation(group: str, n: int, max_nodes: int = DEFAULT_MAX_NODES) -> PresentationReport:
    """Check every relator maps to the identity permutation, and for round
    twin relators that the kappa image is trivial in the cactus group."""
    report = PresentationReport(group, n, relators(group, n))
    for rel in report.relators:
        if not perm_image(rel).is_identity:
            report.failures.append((str(rel), f"permutation image {perm_image(rel)}"))
        if group == "twin" and n >= 2:
            try:
                trivial = cactus_is_trivial(kappa(rel), max_nodes)
            except SolverBudgetExceeded:
                report.failures.append((str(rel), "kappa image undecided: budget exceeded"))
                continue
            report.kappa_checked += 1
            if not trivial:
                report.failures.append((str(rel), f"kappa image {kappa(rel)} not trivial"))
    return report
