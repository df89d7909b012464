"""Permutation images and the maps kappa, bar, mu between word kinds.

Permutations of words are composed left to right: the image of ``u v`` is
"apply u, then v".
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import AnnularWord, CactusWord, MuWord, TwinWord, WordError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]  # images[i - 1] is the image of i

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    @classmethod
    def rotation(cls, n: int) -> Permutation:
        """The n-cycle 1 -> 2 -> ... -> n -> 1."""
        return cls(tuple(range(2, n + 1)) + (1,))

    @classmethod
    def reversal(cls, n: int, p: int, q: int) -> Permutation:
        """Reverse the order of p..q, fixing everything else."""
        return cls(tuple(p + q - x if p <= x <= q else x for x in range(1, n + 1)))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: Permutation) -> Permutation:
        return Permutation(tuple(other(y) for y in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, y in enumerate(self.images, 1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


def _compose(n: int, perms) -> Permutation:
    result = Permutation.identity(n)
    for p in perms:
        result = result.then(p)
    return result


def perm_image_twin(w: TwinWord) -> Permutation:
    n = w.n
    zeta = Permutation.rotation(n)
    table = {("z", 1): zeta, ("z", -1): zeta.inverse()}
    return _compose(n, (table[x] if x[0] == "z" else Permutation.transposition(n, x[1], x[1] + 1)
                        for x in w))


def perm_image_cactus(w: CactusWord) -> Permutation:
    return _compose(w.n, (Permutation.reversal(w.n, p, q) for p, q in w))


def perm_image_annular(w: AnnularWord) -> Permutation:
    n = w.n
    eta = Permutation.rotation(n)

    def image(x):
        if x[0] == "h":
            return eta if x[1] == 1 else eta.inverse()
        i = x[1]
        return Permutation.transposition(n, i, i + 1) if i < n else Permutation.transposition(n, 1, n)

    return _compose(n, map(image, w))


def perm_image(w) -> Permutation:
    if isinstance(w, TwinWord):
        return perm_image_twin(w)
    if isinstance(w, CactusWord):
        return perm_image_cactus(w)
    if isinstance(w, AnnularWord):
        return perm_image_annular(w)
    if isinstance(w, MuWord):
        return perm_image_cactus(w.expand())
    raise TypeError(f"no permutation image for {type(w).__name__}")


def is_pure(w) -> bool:
    return perm_image(w).is_identity


def _span(n: int, p: int, q: int) -> tuple:
    # s_{p,p} reverses a single point; for n = 2 this drops s_{2,2} from kappa(zeta)
    return ((p, q),) if p < q else ()


def kappa(w: TwinWord) -> CactusWord:
    """Letterwise sigma_i -> s_{i,i+1}, zeta -> s_{1,n} s_{2,n}."""
    n = w.n
    if n < 2:
        raise WordError("kappa needs n >= 2")
    zeta = _span(n, 1, n) + _span(n, 2, n)
    out = []
    for x in w:
        if x[0] == "s":
            out.append((x[1], x[1] + 1))
        elif x[1] == 1:
            out.extend(zeta)
        else:
            out.extend(reversed(zeta))
    return CactusWord(n, tuple(out))


def bar(w: CactusWord) -> CactusWord:
    n = w.n
    return CactusWord(n, tuple((n - q + 1, n - p + 1) for p, q in w))


def _bar_mu(letters: tuple, n: int) -> tuple:
    # bar is conjugation by s_{1,n}, which inverts z
    return tuple(("z", -x[1]) if x[0] == "z" else (n - x[1] + 1, n - x[0] + 1) for x in letters)


def mu(u: CactusWord) -> MuWord:
    """Normalise a word in s_{i,i+1}, s_{1,n}, s_{2,n}, s_{1,n-1} towards the kappa alphabet.

    The recursion is on the first letter:
    ``s_{i,i+1} v -> s_{i,i+1} mu(v)``, ``s_{1,n} v -> bar(mu(v)) s_{1,n}``,
    ``s_{2,n} v -> z^-1 bar(mu(v)) s_{1,n}`` and
    ``s_{1,n-1} v -> z bar(mu(v)) s_{1,n}``.
    """
    n = u.n
    if n < 4:
        raise WordError("mu is defined for n >= 4")
    top = (1, n)
    m: tuple = ()
    for x in reversed(u.letters):
        p, q = x
        if q == p + 1:
            m = (x,) + m
        elif x == top:
            m = _bar_mu(m, n) + (top,)
        elif x == (2, n):
            m = (("z", -1),) + _bar_mu(m, n) + (top,)
        elif x == (1, n - 1):
            m = (("z", 1),) + _bar_mu(m, n) + (top,)
        else:
            raise WordError(f"s_{{{p},{q}}} is outside the domain of mu")
    return MuWord(n, m)


def mu_prime(u: CactusWord) -> tuple[MuWord, int]:
    """mu(u) without its trailing run of s_{1,n}, and the run length."""
    m = mu(u)
    letters = m.letters
    k = 0
    while k < len(letters) and letters[len(letters) - 1 - k] == (1, u.n):
        k += 1
    return MuWord(u.n, letters[:len(letters) - k]), k


def round_to_annular(w: TwinWord) -> AnnularWord:
    """Embed the round twin group on n strands into the annular twin group on n+1."""
    n = w.n
    out = []
    for x in w:
        if x[0] == "s":
            out.append(("a", x[1]))
        elif x[1] == 1:
            out += [("a", n), ("h", 1)]
        else:
            out += [("h", -1), ("a", n)]
    return AnnularWord(n + 1, tuple(out))
