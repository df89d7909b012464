"""Word problems in the cactus groups J_n and the round twin groups.

A trivial word in J_n can be carried to the empty word by single relation
applications that never make it longer.  So the cactus solver explores the
class of a word under length-preserving moves (commuting disjoint letters,
nested rewrites in both directions) and cancels s s -> 1 as soon as a square
appears; the word is trivial iff this reaches the empty word.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .maps import kappa, perm_image_cactus, perm_image_twin
from .words import CactusWord, TwinWord, WordError, free_reduce

DEFAULT_MAX_NODES = 10**6


class SolverBudgetExceeded(RuntimeError):
    """The search hit its node ceiling; the verdict is undecided."""


@lru_cache(maxsize=None)
def _move_table(n: int):
    letters = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    code = {x: i for i, x in enumerate(letters)}
    moves = []
    for x in letters:
        row = []
        for y in letters:
            (p, q), (m, r) = x, y
            if q < m or r < p:
                row.append((code[y], code[x]))
            elif p <= m and r <= q and x != y:
                row.append((code[(p + q - r, p + q - m)], code[x]))
            elif m <= p and q <= r and x != y:
                row.append((code[y], code[(m + r - q, m + r - p)]))
            else:
                row.append(None)
        moves.append(row)
    return letters, code, moves


def _has_square(w: tuple, i: int) -> bool:
    lo = max(i - 1, 0)
    hi = min(i + 2, len(w) - 1)
    return any(w[j] == w[j + 1] for j in range(lo, hi))


def _cancel(w: tuple) -> tuple:
    stack = []
    for x in w:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def cactus_is_trivial(w: CactusWord, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    if not perm_image_cactus(w).is_identity:
        return False
    _, code, moves = _move_table(w.n)
    word = _cancel(tuple(code[x] for x in w))
    visited = 0
    while word:
        seen = {word}
        queue = deque([word])
        shorter = None
        while queue and shorter is None:
            u = queue.popleft()
            for i in range(len(u) - 1):
                mv = moves[u[i]][u[i + 1]]
                if mv is None:
                    continue
                v = u[:i] + mv + u[i + 2:]
                if v in seen:
                    continue
                if _has_square(v, i):
                    shorter = v
                    break
                seen.add(v)
                queue.append(v)
            visited += 1
            if visited > max_nodes:
                raise SolverBudgetExceeded(f"explored more than {max_nodes} words")
        if shorter is None:
            return False
        word = _cancel(shorter)
    return True


def cactus_equal(u: CactusWord, v: CactusWord, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    if u.n != v.n:
        raise WordError("words live in different cactus groups")
    return cactus_is_trivial(CactusWord(u.n, u.letters + tuple(reversed(v.letters))), max_nodes)


def twin_is_trivial(w: TwinWord, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    """Decide w = 1 in the round twin group on w.n strands.

    For n >= 4 kappa is injective and the cactus solver decides.  For n <= 3
    the substitution sigma_2 = zeta^-1 sigma_1 zeta presents the group as the
    free product of Z/2 (sigma_1) and Z (zeta), where free reduction decides.
    """
    if not perm_image_twin(w).is_identity:
        return False
    if w.n >= 4:
        return cactus_is_trivial(kappa(w), max_nodes)
    letters = []
    for x in w:
        if x == ("s", 2):
            letters += [("z", -1), ("s", 1), ("z", 1)]
        else:
            letters.append(x)
    return len(free_reduce(TwinWord(w.n, tuple(letters)))) == 0


def twin_equal(u: TwinWord, v: TwinWord, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    if u.n != v.n:
        raise WordError("words live in different groups")
    return twin_is_trivial(u * v.inverse(), max_nodes)
