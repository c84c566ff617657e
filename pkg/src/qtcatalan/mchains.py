"""Chain maps on m-Dyck words and the endpoint sets they produce.

Words are handled internally as plain tuples (0, g1, ..., g_{n-1}); the
public functions accept either an MDyckWord or a tuple together with m.
T is always the set of words with g1 = 0.  The map f lowers area by one and
raises dinv_m by one.  For n <= 4 it is glued from the default map f0 and
the extra piece f1.  For n = 5 it is a longer case analysis whose
initial set is only known as the complement of the image.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from .chainfw import ChainSystem
from .dyck import Gamma, MDyckWord, dinv_of, iter_gammas
from .errors import CaseMismatch, NotInDomain, Unsupported, WrongPart

WordLike = Union[MDyckWord, Sequence[int]]

PART_LABELS = ("D1", "D2", "D3", "D1'", "D2'", "D3'")


def _unpack(w: WordLike, m: Optional[int]) -> tuple[Gamma, int]:
    if isinstance(w, MDyckWord):
        return w.gamma, w.m
    if m is None:
        raise TypeError("m is required when w is a plain tuple")
    return tuple(w), m


def _rewrap(w: WordLike, gamma: Gamma, m: int):
    return MDyckWord(gamma, m) if isinstance(w, MDyckWord) else gamma


# ---------------------------------------------------------------- f0 and g0

def _r(g: Gamma, m: int) -> int:
    n = len(g)
    for i in range(2, n):
        if g[i] - g[i - 2] <= m:
            return i
    return n


def _rp(g: Gamma, m: int) -> int:
    n = len(g)
    last = g[n - 1]
    for i in range(2, n + 1):
        if g[i - 2] >= last + 1 - m:
            return i
    return 0


def _in_a0(g: Gamma, m: int) -> bool:
    if len(g) < 2 or g[1] <= 0:
        return False
    r = _r(g, m)
    return g[r - 1] - 1 <= g[-1] + m


def _f0(g: Gamma, m: int) -> Gamma:
    r = _r(g, m)
    return g[: r - 1] + g[r:] + (g[r - 1] - 1,)


def _in_b0(g: Gamma, m: int) -> bool:
    if len(g) < 2:
        return False
    rp = _rp(g, m)
    if rp == 0 or g[rp - 1] > g[-1] + 1 + m:
        return False
    return all(g[i] - g[i - 2] > m for i in range(2, rp - 1))


def _g0(g: Gamma, m: int) -> Gamma:
    rp = _rp(g, m)
    return g[: rp - 1] + (g[-1] + 1,) + g[rp - 1 : -1]


def r_index(w: WordLike, m: Optional[int] = None) -> int:
    """Least i in 2..n-1 with g_i - g_{i-2} <= m, or n if there is none."""
    g, m = _unpack(w, m)
    if len(g) < 2:
        raise ValueError("r is defined for n >= 2")
    return _r(g, m)


def rprime_index(w: WordLike, m: Optional[int] = None) -> int:
    """Least i in 2..n with g_{i-2} >= g_{n-1} + 1 - m, or 0 if there is none."""
    g, m = _unpack(w, m)
    if len(g) < 2:
        raise ValueError("r' is defined for n >= 2")
    return _rp(g, m)


def in_A0(w: WordLike, m: Optional[int] = None) -> bool:
    return _in_a0(*_unpack(w, m))


def in_B0(w: WordLike, m: Optional[int] = None) -> bool:
    return _in_b0(*_unpack(w, m))


def f0(w: WordLike, m: Optional[int] = None):
    """Move g_{r-1} - 1 to the end of the word."""
    g, m = _unpack(w, m)
    if not _in_a0(g, m):
        raise NotInDomain(f"{g} is not in the domain of f0 (m={m})")
    return _rewrap(w, _f0(g, m), m)


def g0(w: WordLike, m: Optional[int] = None):
    """Inverse of f0."""
    g, m = _unpack(w, m)
    if not _in_b0(g, m):
        raise NotInDomain(f"{g} is not in the image of f0 (m={m})")
    return _rewrap(w, _g0(g, m), m)


# ------------------------------------------------------------- n = 4 pieces

def _in_a1(g: Gamma, m: int) -> bool:
    return len(g) == 4 and g[2] - g[3] > m + 1


def _f1(g: Gamma) -> Gamma:
    return (0, g[3] + 1, g[1] - 1, g[2] - 1)


def in_A1(w: WordLike, m: Optional[int] = None) -> bool:
    return _in_a1(*_unpack(w, m))


def f1(w: WordLike, m: Optional[int] = None):
    g, m = _unpack(w, m)
    if not _in_a1(g, m):
        raise NotInDomain(f"{g} is not in the domain of f1 (m={m})")
    return _rewrap(w, _f1(g), m)


def _piecewise_f4(g: Gamma, m: int) -> Gamma:
    _, g1, g2, g3 = g
    if g2 <= m:
        return (0, g2, g3, g1 - 1)
    if g3 - g1 > m:
        return (0, g1, g2, g3 - 1)
    if g2 - g3 > m + 1:
        return (0, g3 + 1, g1 - 1, g2 - 1)
    return (0, g1, g3, g2 - 1)


def piecewise_f4(w: WordLike, m: Optional[int] = None):
    """The four-branch description of the n = 4 map, used as a cross-check."""
    g, m = _unpack(w, m)
    if len(g) != 4:
        raise ValueError("piecewise_f4 needs a word of length 4")
    if g[1] == 0:
        raise NotInDomain(f"{g} is terminal")
    return _rewrap(w, _piecewise_f4(g, m), m)


# ---------------------------------------------------------------- n = 5 map

def _f5(g: Gamma, m: int) -> Gamma:
    _, g1, g2, g3, g4 = g
    if g2 <= m:
        return (0, g2, g3, g4, g1 - 1)
    if g4 >= m:
        if g3 - g1 <= m:
            return (0, g1, g3, g4, g2 - 1)
        if g4 - g2 > m:
            return (0, g1, g2, g3, g4 - 1)
        if g3 - g4 <= m + 1:
            return (0, g1, g2, g4, g3 - 1)
        return (0, g1, g4 + 1, g2 - 1, g3 - 1)
    if g3 - g1 <= m:
        if g2 - g4 <= m + 1:
            return (0, g1, g3, g4, g2 - 1)
        if g3 - g4 > m + 1:
            return (0, g4 + 1, g1, g2 - 1, g3 - 1)
        if g2 - g3 > m or g3 <= m:
            return (0, g4 + 1, g3, g1 - 1, g2 - 1)
        return (0, g4 + 1, g1, g3 - 1, g2 - 1)
    if g2 - g4 <= m + 1:
        if g3 - g4 <= m + 1:
            return (0, g1, g2, g4, g3 - 1)
        return (0, g4 + 1, g1, g2 - 1, g3 - 1)
    if g3 - g4 > m + 2 and g2 - g4 > m + 2:
        return (0, g4 + 2, g1 - 1, g2 - 1, g3 - 1)
    return (0, g1, g4 + 1, g2 - 1, g3 - 1)


# ------------------------------------------------------------ the chain map

def chain_map_gamma(g: Gamma, m: int) -> Gamma:
    """f on a plain tuple; the caller guarantees g is an m-Dyck word."""
    n = len(g)
    if n >= 6:
        raise Unsupported(f"no chain map is known for n = {n}")
    if n < 2 or g[1] == 0:
        raise NotInDomain(f"{g} is terminal")
    if n == 5:
        return _f5(g, m)
    if _in_a0(g, m):
        return _f0(g, m)
    if _in_a1(g, m):
        return _f1(g)
    raise NotInDomain(f"{g} lies outside A0 and A1 (m={m})")


def chain_map(w: WordLike, m: Optional[int] = None):
    """The chain map f on W\\T, for 2 <= n <= 5."""
    g, m = _unpack(w, m)
    return _rewrap(w, chain_map_gamma(g, m), m)


@lru_cache(maxsize=64)
def build_system(n: int, m: int) -> ChainSystem:
    """The chain system on W_n^(m) (words as tuples, in lexicographic order)."""
    if n >= 6:
        raise Unsupported(f"no chain map is known for n = {n}")
    if n < 1:
        raise ValueError("n must be positive")
    words = iter_gammas(n, m)
    a, d, f = {}, {}, {}
    terminal = []
    for g in words:
        a[g] = sum(g)
        d[g] = dinv_of(g, m)
        if n == 1 or g[1] == 0:
            terminal.append(g)
        else:
            f[g] = chain_map_gamma(g, m)
    return ChainSystem(words, a, d, f, terminal)


# ------------------------------------------------------------ endpoint sets

def d_parts(m: int) -> dict[str, list[Gamma]]:
    """The closed-form pieces of I (D1, D2, D3) and of T (D1', D2', D3') for n = 4."""
    parts = {
        "D1": [
            (0, g1, g2, g2 + m)
            for g1 in range(1, m + 1)
            for g2 in range(m + 1, g1 + m + 1)
        ],
        "D2": [
            (0, g1, m, g3)
            for g1 in range(0, m + 1)
            for g3 in range(g1 + m, 2 * m + 1)
        ],
        "D3": [
            (0, 0, g2, g3)
            for g2 in range(0, m)
            for g3 in range(m, g2 + m + 1)
        ],
    }
    terminal = [(0, 0, g2, g3) for g2 in range(m + 1) for g3 in range(g2 + m + 1)]
    parts["D1'"] = [g for g in terminal if g[2] > g[3]]
    parts["D2'"] = [g for g in terminal if g[2] <= g[3] <= m]
    parts["D3'"] = [g for g in terminal if g[3] > m]
    return {k: sorted(v) for k, v in parts.items()}


def closed_form_initial(n: int, m: int) -> list[Gamma]:
    if n == 1:
        return [(0,)]
    if n == 2:
        return [(0, m)]
    if n == 3:
        return [(0, i, i + m) for i in range(m + 1)]
    if n == 4:
        p = d_parts(m)
        return sorted(p["D1"] + p["D2"] + p["D3"])
    raise Unsupported(f"no closed form for the initial set when n = {n}")


@dataclass
class EndpointSets:
    I: list
    T: list
    named_parts: dict = field(default_factory=dict)


def endpoint_sets(n: int, m: int) -> EndpointSets:
    """I and T as word lists; for n <= 4 the closed form of I is checked against W minus f(W\\T)."""
    s = build_system(n, m)
    initial = s.ordered(s.I)
    if n <= 4:
        closed = closed_form_initial(n, m)
        if set(closed) != set(initial) or len(closed) != len(initial):
            raise CaseMismatch(f"closed-form I disagrees with the image complement (n={n}, m={m})")
    parts = {}
    if n == 4:
        parts = {k: [MDyckWord(g, m) for g in v] for k, v in d_parts(m).items()}
    return EndpointSets(
        [MDyckWord(g, m) for g in initial],
        [MDyckWord(g, m) for g in s.ordered(s.T)],
        parts,
    )


def _part_dinv(m: int, part: str, g: Gamma) -> int:
    g2, g3 = g[2], g[3]
    return {
        "D1'": lambda: 6 * m + 1 - 3 * g2 - g3,
        "D2'": lambda: 6 * m - g2 - 3 * g3,
        "D3'": lambda: 4 * m - g2 - g3,
        "D1": lambda: 2 * m - g2,
        "D2": lambda: 3 * m - g3,
        "D3": lambda: 4 * m - g2 - g3,
    }[part]()


def stats_on_parts(m: int, part: str, w: WordLike) -> tuple[int, int]:
    """(area, dinv_m) of a word in one of the n = 4 parts, dinv from its closed form."""
    if part not in PART_LABELS:
        raise WrongPart(f"unknown part {part!r}")
    g, _ = _unpack(w, m)
    if g not in set(d_parts(m)[part]):
        raise WrongPart(f"{g} is not in {part} (m={m})")
    return sum(g), _part_dinv(m, part, g)


# ------------------------------------------------------ auxiliary g and g'

@dataclass
class AuxMaps:
    """Maps that certify C_T(q,t) = C_I(t,q) by hand.

    g moves inside I with (area, dinv) shift (-2, +1); g_prime moves inside
    T with shift (+1, -2).  Each domain lists the words on which the map
    is defined.
    """

    n: int
    m: int
    g: Callable[[Gamma], Gamma]
    g_domain: list
    g_prime: Callable[[Gamma], Gamma]
    g_prime_domain: list

    def apply_g(self, w: WordLike):
        gam, _ = _unpack(w, self.m)
        if gam not in self._gd:
            raise NotInDomain(f"{gam} is not in the domain of g")
        return _rewrap(w, self.g(gam), self.m)

    def apply_g_prime(self, w: WordLike):
        gam, _ = _unpack(w, self.m)
        if gam not in self._gpd:
            raise NotInDomain(f"{gam} is not in the domain of g'")
        return _rewrap(w, self.g_prime(gam), self.m)

    def __post_init__(self):
        self._gd = frozenset(self.g_domain)
        self._gpd = frozenset(self.g_prime_domain)

    def orbit(self, which: str, start: WordLike) -> list:
        """Iterate g (or g') from start until it leaves the domain."""
        step = self.apply_g if which == "g" else self.apply_g_prime
        out = [start]
        while True:
            try:
                out.append(step(out[-1]))
            except NotInDomain:
                return out


def aux_chain_maps(n: int, m: int) -> AuxMaps:
    if n == 3:
        initial = closed_form_initial(3, m)
        terminal = [(0, 0, i) for i in range(m + 1)]
        return AuxMaps(
            3, m,
            lambda g: (0, g[1] - 1, g[2] - 1),
            [g for g in initial if g != (0, 0, m)],
            lambda g: (0, 0, g[2] + 1),
            [g for g in terminal if g != (0, 0, m)],
        )
    if n == 4:
        p = d_parts(m)
        d1 = set(p["D1"])

        def g(gam):
            if gam in d1:
                return (0, gam[1], gam[2] - 1, gam[3] - 1)
            return (0, gam[1] - 1, gam[2], gam[3] - 1)

        dom = [x for x in sorted(p["D1"] + p["D2"]) if not (x[1] == 0 and x[2] == m)]
        head = sorted(p["D1'"] + p["D2'"])
        return AuxMaps(
            4, m,
            g, dom,
            lambda gam: (0, 0, gam[3] + 1, gam[2]),
            [x for x in head if x[3] != m],
        )
    raise Unsupported("auxiliary maps exist for n = 3 and n = 4 only")


# ---------------------------------------------------- closed coefficients

def _floor_plus(num: int, den: int = 2) -> int:
    return max(num // den, 0)


def closed_coeff_c4(m: int, j: int, k: int) -> int:
    """Coefficient of q^j t^k in C_4^(m) from its three-case closed form."""
    if j + k > 4 * m:
        return min(
            _floor_plus(-6 * m + 2 + 3 * j + k),
            _floor_plus(6 * m + 2 - j - k),
            _floor_plus(-6 * m + 2 + j + 3 * k),
        )
    if j + k == 4 * m:
        return min(_floor_plus(-m + 2 + j), _floor_plus(-m + 2 + k))
    return 0


def lattice_points_in_triangle(a, b, c) -> set[tuple[int, int]]:
    """Integer points inside or on the closed triangle abc (a segment if it is flat)."""
    def cross(o, p, x):
        return (p[0] - o[0]) * (x[1] - o[1]) - (p[1] - o[1]) * (x[0] - o[0])

    xs = [a[0], b[0], c[0]]
    ys = [a[1], b[1], c[1]]
    pts = set()
    orient = cross(a, b, c)
    if orient == 0:
        # collinear vertices: the closed segment (or point) they span
        u, v = max(((a, b), (a, c), (b, c)), key=lambda e: abs(e[0][0] - e[1][0]) + abs(e[0][1] - e[1][1]))
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                if cross(u, v, (x, y)) == 0:
                    pts.add((x, y))
        return pts
    sign = 1 if orient > 0 else -1
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if (sign * cross(a, b, p) >= 0 and sign * cross(b, c, p) >= 0
                    and sign * cross(c, a, p) >= 0):
                pts.add(p)
    return pts


def triangle_vertices(kind: str, m: int) -> tuple:
    if kind == "C3":
        return (0, 3 * m), (m, m), (3 * m, 0)
    if kind == "Delta4":
        return (0, 6 * m), (m, 3 * m), (2 * m, 2 * m)
    raise ValueError(f"unknown triangle {kind!r}")


def triangle_points(kind: str, m: int) -> set[tuple[int, int]]:
    if m < 1:
        raise ValueError("m must be positive")
    return lattice_points_in_triangle(*triangle_vertices(kind, m))
