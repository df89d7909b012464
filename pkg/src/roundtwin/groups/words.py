"""Words in the twin, round twin, annular twin and cactus generators.

Letter encodings:

* twin words (round twin group on n strands): ``("s", i)`` for sigma_i and
  ``("z", +1)`` / ``("z", -1)`` for zeta and its inverse;
* cactus words: ``(p, q)`` for s_{p,q};
* annular words: ``("a", i)`` for alpha_i and ``("h", +1)`` / ``("h", -1)``
  for eta and its inverse;
* mu words: cactus letters ``(p, q)`` plus ``("z", +1)`` / ``("z", -1)``
  for z = s_{1,n} s_{2,n} and its inverse.

All generators other than zeta, eta and z are involutions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import ClassVar


class WordError(ValueError):
    """Malformed word text or a letter outside the generating set."""


def _inverse_letter(x):
    if isinstance(x[0], str) and x[0] in "zh":
        return (x[0], -x[1])
    return x


@dataclass(frozen=True)
class _Word:
    n: int
    letters: tuple = ()

    _tokens: ClassVar[re.Pattern]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(tuple(x) for x in self.letters))
        for x in self.letters:
            self._check_letter(x)

    def _check_letter(self, x):
        raise NotImplementedError

    @classmethod
    def parse(cls, n: int, text: str):
        letters = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = cls._tokens.match(text, pos)
            if m is None:
                raise WordError(f"cannot read letter at position {pos}: {text[pos:]!r}")
            letters.append(cls._letter_from_match(m))
            pos = m.end()
        return cls(n, tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise WordError("can only multiply words of the same kind and n")
        return type(self)(self.n, self.letters + other.letters)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        return type(self)(self.n, base.letters * abs(k))

    def inverse(self):
        return type(self)(self.n, tuple(_inverse_letter(x) for x in reversed(self.letters)))

    def __str__(self):
        return " ".join(self._format_letter(x) for x in self.letters)


class TwinWord(_Word):
    """Word in sigma_1..sigma_{n-1} and zeta."""

    _tokens = re.compile(r"s(\d+)|(z)|(Z)")

    def _check_letter(self, x):
        if x[0] == "s" and 1 <= x[1] < self.n:
            return
        if x[0] == "z" and x[1] in (1, -1):
            return
        raise WordError(f"invalid twin letter {x} for n={self.n}")

    @staticmethod
    def _letter_from_match(m):
        if m.group(1):
            return ("s", int(m.group(1)))
        return ("z", 1) if m.group(2) else ("z", -1)

    @staticmethod
    def _format_letter(x):
        if x[0] == "s":
            return f"s{x[1]}"
        return "z" if x[1] == 1 else "Z"


class CactusWord(_Word):
    """Word in the involutions s_{p,q}, 1 <= p < q <= n."""

    _tokens = re.compile(r"r\(\s*(\d+)\s*,\s*(\d+)\s*\)")

    def _check_letter(self, x):
        p, q = x
        if not (isinstance(p, int) and isinstance(q, int) and 1 <= p < q <= self.n):
            raise WordError(f"invalid cactus letter s_{{{p},{q}}} for n={self.n}")

    @staticmethod
    def _letter_from_match(m):
        return (int(m.group(1)), int(m.group(2)))

    @staticmethod
    def _format_letter(x):
        return f"r({x[0]},{x[1]})"


class AnnularWord(_Word):
    """Word in alpha_1..alpha_n and eta."""

    _tokens = re.compile(r"a(\d+)|(h)|(H)")

    def _check_letter(self, x):
        if x[0] == "a" and 1 <= x[1] <= self.n:
            return
        if x[0] == "h" and x[1] in (1, -1):
            return
        raise WordError(f"invalid annular letter {x} for n={self.n}")

    @staticmethod
    def _letter_from_match(m):
        if m.group(1):
            return ("a", int(m.group(1)))
        return ("h", 1) if m.group(2) else ("h", -1)

    @staticmethod
    def _format_letter(x):
        if x[0] == "a":
            return f"a{x[1]}"
        return "h" if x[1] == 1 else "H"


class MuWord(_Word):
    """Word in s_{i,i+1}, s_{1,n} and z = s_{1,n} s_{2,n}."""

    _tokens = re.compile(r"r\(\s*(\d+)\s*,\s*(\d+)\s*\)|(z)|(Z)")

    def _check_letter(self, x):
        if x[0] == "z" and x[1] in (1, -1):
            return
        p, q = x
        if isinstance(p, int) and (q == p + 1 and 1 <= p < self.n or (p, q) == (1, self.n)):
            return
        raise WordError(f"letter {x} is not in the mu alphabet for n={self.n}")

    @staticmethod
    def _letter_from_match(m):
        if m.group(1):
            return (int(m.group(1)), int(m.group(2)))
        return ("z", 1) if m.group(3) else ("z", -1)

    @staticmethod
    def _format_letter(x):
        if x[0] == "z":
            return "z" if x[1] == 1 else "Z"
        return f"r({x[0]},{x[1]})"

    def expand(self) -> CactusWord:
        """Substitute z -> s_{1,n} s_{2,n} and z^-1 -> s_{2,n} s_{1,n}."""
        n = self.n
        out = []
        for x in self.letters:
            if x == ("z", 1):
                out += [(1, n), (2, n)]
            elif x == ("z", -1):
                out += [(2, n), (1, n)]
            else:
                out.append(x)
        return CactusWord(n, tuple(out))


def free_reduce(word: _Word) -> _Word:
    """Cancel adjacent inverse pairs until none remain."""
    stack = []
    for x in word.letters:
        if stack and stack[-1] == _inverse_letter(x):
            stack.pop()
        else:
            stack.append(x)
    return type(word)(word.n, tuple(stack))
