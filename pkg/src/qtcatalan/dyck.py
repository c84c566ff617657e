"""m-Dyck words, the area and dinv_m statistics, and C_n^(m)(q, t)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .qtpoly import Poly

Gamma = tuple[int, ...]


def sc(m: int, p: int) -> int:
    """Score of an entry difference p in dinv_m."""
    if 1 <= p <= m:
        return m + 1 - p
    if -m <= p <= 0:
        return m + p
    return 0


def is_m_dyck(gamma: Sequence[int], m: int) -> bool:
    if not gamma or gamma[0] != 0:
        return False
    return all(0 <= gamma[i] <= gamma[i - 1] + m for i in range(1, len(gamma)))


@dataclass(frozen=True, order=True)
class MDyckWord:
    """A word (0, g1, ..., g_{n-1}) with 0 <= g_i <= g_{i-1} + m.

    m is stored with the word because dinv depends on it.
    """

    gamma: Gamma
    m: int

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if not is_m_dyck(self.gamma, self.m):
            raise ValueError(f"{self.gamma} is not a {self.m}-Dyck word")

    @property
    def n(self) -> int:
        return len(self.gamma)

    def __getitem__(self, i: int) -> int:
        return self.gamma[i]

    def __str__(self) -> str:
        return format_word(self.gamma)


def area_of(gamma: Sequence[int]) -> int:
    return sum(gamma)


def dinv_of(gamma: Sequence[int], m: int) -> int:
    total = 0
    n = len(gamma)
    for i in range(n):
        gi = gamma[i]
        for j in range(i + 1, n):
            p = gi - gamma[j]
            if 1 <= p <= m:
                total += m + 1 - p
            elif -m <= p <= 0:
                total += m + p
    return total


def area(w: MDyckWord) -> int:
    return area_of(w.gamma)


def dinv(w: MDyckWord) -> int:
    return dinv_of(w.gamma, w.m)


def iter_gammas(n: int, m: int) -> list[Gamma]:
    """All m-Dyck words of length n as tuples, in lexicographic order."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    words: list[Gamma] = [(0,)]
    for _ in range(1, n):
        words = [w + (v,) for w in words for v in range(w[-1] + m + 1)]
    return words


def enumerate_words(n: int, m: int) -> list[MDyckWord]:
    return [MDyckWord(g, m) for g in iter_gammas(n, m)]


def fuss_catalan(n: int, m: int) -> int:
    return comb((m + 1) * n, n) // (m * n + 1)


def stats_table(n: int, m: int) -> dict[Gamma, tuple[int, int]]:
    """(area, dinv_m) for every word of W_n^(m)."""
    return {g: (sum(g), dinv_of(g, m)) for g in iter_gammas(n, m)}


def genfun(n: int, m: int) -> Poly:
    """C_n^(m)(q, t), summed over all m-Dyck words of length n."""
    counts = Counter((sum(g), dinv_of(g, m)) for g in iter_gammas(n, m))
    return Poly(counts)


def format_word(gamma: Sequence[int], compact: bool = False) -> str:
    """Text form of a word.

    Compact mode drops the leading 0 and concatenates digits ("246"), and
    falls back to the comma form when an entry is outside 0..9.  The
    length-one word is "()" in compact mode.
    """
    if compact and len(gamma) == 1:
        return "()"
    if compact and all(0 <= g <= 9 for g in gamma[1:]):
        return "".join(str(g) for g in gamma[1:])
    return ",".join(str(g) for g in gamma)


def parse_word(text: str) -> Gamma:
    """Inverse of :func:`format_word`; a string without commas is read as compact."""
    text = text.strip()
    if text == "()":
        return (0,)
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return (0,) + tuple(int(ch) for ch in text)


def iter_words_with_stats(n: int, m: int) -> Iterator[tuple[Gamma, int, int]]:
    for g in iter_gammas(n, m):
        yield g, sum(g), dinv_of(g, m)
