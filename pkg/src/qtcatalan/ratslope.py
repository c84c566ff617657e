"""Rational-slope q,t-Catalan polynomials.

An r x s Dyck path is stored by the number of full squares between it and
the diagonal in each row (row 0 at the bottom).  Equivalently, x_i is the
column of the north step in row i; x is nondecreasing, x_0 = 0 and
x_i <= floor(r i / s).  The cells above the path form the partition D(pi)
with rows x_{s-1} >= ... >= x_1, and h+ and h- count cells of D(pi)
whose arm/leg ratio brackets the slope.

Three families of words make the height-3 and height-4 cases look like
m-Dyck words: gamma_i = m i - x_i for (4m+2) x 4, (4m-1) x 4 and
(3m-1) x 3 paths.  Each family gets its own chain map, built from the
m-Dyck pieces f0 and f1 with a modified domain.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence

from .chainfw import ChainSystem
from .errors import BadParameters, CaseMismatch, NotInDomain, WrongPart
from .mchains import _f0, _f1, _r, lattice_points_in_triangle
from .qtpoly import Poly

CASES = ("slope_4m2", "slope_4m1", "slope_3m1")


# ---------------------------------------------------------------------- paths


def _floor_rows(r: int, s: int) -> list[int]:
    return [r * i // s for i in range(s)]


@dataclass(frozen=True)
class RSDyckPath:
    r: int
    s: int
    row_cells: tuple

    def __post_init__(self):
        cells = tuple(int(c) for c in self.row_cells)
        object.__setattr__(self, "row_cells", cells)
        if self.r < 1 or self.s < 1:
            raise ValueError("r and s must be positive")
        if len(cells) != self.s:
            raise ValueError(f"expected {self.s} row counts, got {len(cells)}")
        caps = _floor_rows(self.r, self.s)
        x = [cap - c for cap, c in zip(caps, cells)]
        if any(c < 0 for c in cells) or any(v < 0 for v in x):
            raise ValueError(f"row counts {cells} do not fit the {self.r}x{self.s} triangle")
        if any(x[i] > x[i + 1] for i in range(self.s - 1)):
            raise ValueError(f"row counts {cells} do not describe a lattice path")

    @classmethod
    def from_steps(cls, r: int, s: int, x: Sequence[int]) -> "RSDyckPath":
        """Build from north-step columns x_0..x_{s-1}."""
        caps = _floor_rows(r, s)
        return cls(r, s, tuple(cap - v for cap, v in zip(caps, x)))

    @property
    def x(self) -> tuple:
        return tuple(cap - c for cap, c in zip(_floor_rows(self.r, self.s), self.row_cells))

    @property
    def area(self) -> int:
        return sum(self.row_cells)

    def diagram(self) -> tuple:
        """Row lengths of D(pi), top row first (zero rows dropped)."""
        return tuple(v for v in reversed(self.x) if v > 0)


def enumerate_paths(r: int, s: int) -> list[RSDyckPath]:
    caps = _floor_rows(r, s)
    out = []

    def rec(i, prev, acc):
        if i == s:
            out.append(RSDyckPath.from_steps(r, s, acc))
            return
        for v in range(prev, caps[i] + 1):
            rec(i + 1, v, acc + [v])

    rec(1, 0, [0])
    return out


def _cells(x: Sequence[int]):
    """Yield (arm, leg) for every cell of the diagram above a path with north steps x."""
    for i in range(1, len(x)):
        for c in range(x[i]):
            arm = x[i] - c - 1
            leg = sum(1 for i2 in range(1, i) if x[i2] > c)
            yield arm, leg


def h_stats(x: Sequence[int], num: int, den: int) -> tuple[int, int]:
    """(h+, h-) at slope num/den for the path with north-step columns x."""
    hp = hm = 0
    for a, l in _cells(x):
        if a * den <= num * (l + 1) and num * l < den * (a + 1):
            hp += 1
        if a * den < num * (l + 1) and num * l <= den * (a + 1):
            hm += 1
    return hp, hm


def path_stats(p: RSDyckPath, slope_num: int, slope_den: int) -> tuple[int, int, int]:
    """(area, h+, h-) at the given slope."""
    hp, hm = h_stats(p.x, slope_num, slope_den)
    return p.area, hp, hm


@lru_cache(maxsize=128)
def rs_genfun(r: int, s: int) -> Poly:
    """Sum of q^area t^{h+_{r/s}} over all r x s Dyck paths."""
    return Poly.from_counts((p.area, h_stats(p.x, r, s)[0]) for p in enumerate_paths(r, s))


def rs_label(r: int, s: int) -> tuple[int, int, int]:
    """The (r', s', n') index with n' = gcd(r, s)."""
    g = gcd(r, s)
    return r // g, s // g, g


# ---------------------------------------------------------------------- words


def case_dims(case: str, m: int) -> tuple[int, int]:
    if m < 1:
        raise BadParameters("m must be positive")
    if case == "slope_4m2":
        return 4 * m + 2, 4
    if case == "slope_4m1":
        return 4 * m - 1, 4
    if case == "slope_3m1":
        if 3 * m - 1 < 2:
            raise BadParameters("(3m-1) x 3 needs m >= 1 with 3m-1 >= 2")
        return 3 * m - 1, 3
    raise BadParameters(f"unknown case {case!r}; expected one of {CASES}")


def _in_case(case: str, m: int, g: Sequence[int]) -> bool:
    if not g or g[0] != 0:
        return False
    if any(g[i + 1] > g[i] + m for i in range(len(g) - 1)):
        return False
    if case == "slope_4m2":
        return len(g) == 4 and g[1] >= 0 and g[2] >= -1 and g[3] >= -1
    if case == "slope_4m1":
        return len(g) == 4 and min(g[1:]) >= 1
    if case == "slope_3m1":
        return len(g) == 3 and 1 <= g[1] <= m and 1 <= g[2]
    return False


@dataclass(frozen=True)
class RSWord:
    case: str
    m: int
    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))
        case_dims(self.case, self.m)
        if not _in_case(self.case, self.m, self.gamma):
            raise ValueError(f"{self.gamma} is not a {self.case} word for m={self.m}")

    def __str__(self) -> str:
        return ",".join(map(str, self.gamma))


def rs_word(p: RSDyckPath, case: str, m: int) -> RSWord:
    r, s = case_dims(case, m)
    if (p.r, p.s) != (r, s):
        raise CaseMismatch(f"a {p.r}x{p.s} path is not a {case} path for m={m} ({r}x{s})")
    return RSWord(case, m, tuple(m * i - v for i, v in enumerate(p.x)))


def rs_path(w: RSWord) -> RSDyckPath:
    r, s = case_dims(w.case, w.m)
    return RSDyckPath.from_steps(r, s, [w.m * i - g for i, g in enumerate(w.gamma)])


def word_stats(case: str, m: int, g: Sequence[int]) -> tuple[int, int]:
    """(area, h+_m) of a case word, from the underlying path."""
    r, s = case_dims(case, m)
    x = [m * i - v for i, v in enumerate(g)]
    caps = _floor_rows(r, s)
    area = sum(cap - v for cap, v in zip(caps, x))
    return area, h_stats(x, m, 1)[0]


@lru_cache(maxsize=64)
def case_words(case: str, m: int) -> tuple:
    r, s = case_dims(case, m)
    return tuple(sorted(tuple(m * i - v for i, v in enumerate(p.x)) for p in enumerate_paths(r, s)))


# ----------------------------------------------------------------- chain maps


def _is_terminal(case: str, m: int, g) -> bool:
    if case == "slope_4m2":
        return g[2] == -1
    if case == "slope_4m1":
        return g[1] == 1 and g[2] <= m
    return g[1] == 1


def _in_a0_case(case: str, m: int, g) -> bool:
    if _is_terminal(case, m, g):
        return False
    if case == "slope_3m1":
        return True
    r = _r(g, m)
    if g[r - 1] - 1 > g[-1] + m:
        return False
    if case == "slope_4m2":
        return g[r - 1] >= 0
    return g[r - 1] > 1


def rs_chain_map_gamma(case: str, m: int, g) -> tuple:
    if _is_terminal(case, m, g):
        raise NotInDomain(f"{g} is terminal in the {case} system")
    if _in_a0_case(case, m, g):
        return _f0(tuple(g), m)
    if len(g) == 4 and g[2] - g[3] > m + 1:
        return _f1(tuple(g))
    raise NotInDomain(f"{g} is outside the {case} chain map domain (m={m})")


def rs_chain_map(w: RSWord) -> RSWord:
    return RSWord(w.case, w.m, rs_chain_map_gamma(w.case, w.m, w.gamma))


@lru_cache(maxsize=64)
def build_rs_system(case: str, m: int) -> ChainSystem:
    words = case_words(case, m)
    a, d, f, terminal = {}, {}, {}, []
    for g in words:
        a[g], d[g] = word_stats(case, m, g)
        if _is_terminal(case, m, g):
            terminal.append(g)
        else:
            f[g] = rs_chain_map_gamma(case, m, g)
    return ChainSystem(words, a, d, f, terminal)


def rs_parts(case: str, m: int) -> dict[str, list]:
    """Closed-form pieces of I (unprimed) and of T (primed) for a case."""
    words = case_words(case, m)
    if case == "slope_4m2":
        parts = {
            "D1": [(0, g1, g2, g2 + m) for g1 in range(0, m + 1) for g2 in range(m, g1 + m + 1)],
            "D2": [(0, g1, m, g3) for g1 in range(0, m) for g3 in range(g1 + m, 2 * m)],
            "D1'": [g for g in words if g[2] == -1 and g[1] > g[3]],
            "D2'": [g for g in words if g[2] == -1 and g[1] <= g[3]],
        }
    elif case == "slope_4m1":
        parts = {
            "D1": [(0, g1, g2, g2 + m) for g1 in range(2, m + 1) for g2 in range(m, g1 + m + 1)]
            + [(0, 1, m + 1, 2 * m + 1)],
            "D2": [(0, g1, m, g3) for g1 in range(2, m + 1) for g3 in range(g1 + m, 2 * m)],
            "D3": [(0, 1, g2, g3) for g2 in range(1, m + 1) for g3 in range(m + 1, g2 + m + 1)],
            "D1'": [g for g in words if g[1] == 1 and g[3] < g[2] <= m],
            "D2'": [g for g in words if g[1] == 1 and g[2] <= g[3] <= m],
            "D3'": [g for g in words if g[1] == 1 and g[2] <= m < g[3]],
        }
    elif case == "slope_3m1":
        parts = {
            "D1": [(0, g1, g1 + m) for g1 in range(1, m + 1)],
            "D2": [(0, 1, m)],
            "D1'": [(0, 1, g2) for g2 in range(1, m + 1)],
            "D2'": [(0, 1, m + 1)],
        }
    else:
        case_dims(case, m)
        raise AssertionError
    return {k: sorted(v) for k, v in parts.items()}


def part_formula(case: str, m: int, part: str, g) -> tuple[int, int]:
    """(area, h+_m) of a word in a named part, from the closed formulas."""
    if case == "slope_4m2":
        g1, g2, g3 = g[1], g[2], g[3]
        table = {
            "D1'": (g1 + g3 + 1, 6 * m + 1 - 3 * g1 - g3),
            "D2'": (g1 + g3 + 1, 6 * m - g1 - 3 * g3),
            "D1": (g1 + 2 * g2 + m + 2, 2 * m - g2),
            "D2": (g1 + g3 + m + 2, 3 * m - g3),
        }
    elif case == "slope_4m1":
        g1, g2, g3 = g[1], g[2], g[3]
        table = {
            "D1'": (g2 + g3 - 2, 6 * m + 2 - 3 * g2 - g3),
            "D2'": (g2 + g3 - 2, 6 * m + 1 - g2 - 3 * g3),
            "D3'": (g2 + g3 - 2, 4 * m - g2 - g3),
            "D1": (g1 + 2 * g2 + m - 3, 2 * m - g2),
            "D2": (g1 + g3 + m - 3, 3 * m - g3),
            "D3": (g2 + g3 - 2, 4 * m - g2 - g3),
        }
    else:
        g1, g2 = g[1], g[2]
        table = {
            "D1'": (g2 - 1, 3 * m - 2 * g2),
            "D2'": (m, m - 1),
            "D1": (2 * g1 + m - 2, m - g1),
            "D2": (m - 1, m),
        }
    if part not in table:
        raise WrongPart(f"{case} has no part {part!r}")
    if tuple(g) not in set(rs_parts(case, m)[part]):
        raise WrongPart(f"{tuple(g)} is not in {part} ({case}, m={m})")
    return table[part]


@dataclass
class RSEndpointSets:
    I: list
    T: list
    named_parts: dict = field(default_factory=dict)


def rs_endpoint_sets(case: str, m: int) -> RSEndpointSets:
    """I and T of the case system; I is checked against its closed-form parts."""
    s = build_rs_system(case, m)
    parts = rs_parts(case, m)
    closed_i = [g for k, v in parts.items() if not k.endswith("'") for g in v]
    closed_t = [g for k, v in parts.items() if k.endswith("'") for g in v]
    if Counter(closed_i) != Counter(s.I):
        raise CaseMismatch(f"closed-form I disagrees with the image complement ({case}, m={m})")
    if Counter(closed_t) != Counter(s.T):
        raise CaseMismatch(f"closed-form T disagrees with the terminal set ({case}, m={m})")
    return RSEndpointSets(
        [RSWord(case, m, g) for g in s.ordered(s.I)],
        [RSWord(case, m, g) for g in s.ordered(s.T)],
        {k: [RSWord(case, m, g) for g in v] for k, v in parts.items()},
    )


def delta_triangle(case: str, m: int) -> set[tuple[int, int]]:
    """Lattice points of the triangle matched by the D1/D2 and D1'/D2' parts."""
    if case == "slope_4m2":
        verts = (0, 6 * m + 2), (m, 3 * m + 2), (2 * m, 2 * m + 2)
    elif case == "slope_4m1":
        verts = (0, 6 * m - 3), (m - 1, 3 * m), (2 * m - 2, 2 * m + 1)
    else:
        raise BadParameters(f"no triangle recorded for {case}")
    return lattice_points_in_triangle(*verts)


# ------------------------------------------------------ coefficient formulas


def _fp(num: int) -> int:
    return max(num // 2, 0)


def closed_coeff_rs(case: str, m: int, j: int, k: int) -> int:
    """Coefficient of q^j t^k in C_{2m+1,2,2} ("c2m122") or C_{4m-1,4,1} ("c4m141")."""
    d = j + k
    if case == "c2m122":
        if 4 * m + 2 <= d <= 6 * m + 2:
            return min(_fp(-6 * m + 3 * j + k), _fp(6 * m + 4 - d), _fp(-6 * m + j + 3 * k))
        return 0
    if case == "c4m141":
        if 4 * m - 1 <= d <= 6 * m - 3:
            return min(_fp(-6 * m + 5 + 3 * j + k), _fp(6 * m - 1 - d), _fp(-6 * m + 5 + j + 3 * k))
        if d == 4 * m - 2:
            return min(_fp(-m + 2 + j), _fp(-m + 2 + k))
        return 0
    raise BadParameters(f"unknown coefficient case {case!r}")


# ------------------------------------------------------------- Gorsky-Mazin


@dataclass
class GMConstruction:
    r: int
    k: int
    X: list
    Y: list
    f: dict
    I: dict
    g: dict
    area: dict
    h_plus: dict

    def region_x(self, p) -> int:
        c, d = p
        if d <= self.k:
            return 1
        return 2 if d - c <= self.k else 3

    def region_y(self, p) -> int:
        a, b = p
        if a + b <= self.k:
            return 1
        return 2 if (a + b + self.k) % 2 == 0 else 3

    def wt(self, p) -> tuple[int, int]:
        a, b = p
        return self.r - 1 - (a + 2 * b), a + b

    def genfun(self) -> Poly:
        return Poly.from_counts((self.area[p], self.h_plus[p]) for p in self.X)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["c", "d", "region", "a", "b", "wt1", "wt2"])
        for p in self.X:
            a, b = self.f[p]
            w.writerow([p[0], p[1], self.region_x(p), a, b, *self.wt((a, b))])
        return buf.getvalue()


def gm_construct(r: int) -> GMConstruction:
    """The r x 3 construction, with the slope parameter m taken to be r."""
    if r <= 3 or gcd(r, 3) != 1:
        raise BadParameters(f"need r > 3 with gcd(r, 3) = 1, got r = {r}")
    m = r
    k = r // 3
    X = [(c, d) for d in range(2 * r // 3 + 1) for c in range(min(d, k) + 1)]
    Y = [(a, b) for b in range((m - 1) // 3 + 1) for a in range(m - 1 - 3 * b + 1)]
    area, hp = {}, {}
    for c, d in X:
        area[(c, d)] = m - 1 - (c + d)
        hp[(c, d)] = sum(1 for a, l in _cells((0, c, d)) if -2 <= 3 * a - m * l <= m)
    f = {}
    for c, d in X:
        if d <= k:
            f[(c, d)] = (d - c, c)
        elif d - c <= k:
            f[(c, d)] = (3 * d - 2 * k - c, c - d + k)
        else:
            f[(c, d)] = (3 * c - d + 2 * k + 2, d - c - k - 1)
    inv = {v: u for u, v in f.items()}
    I = {(a, b): (m - 1 - a - 3 * b, b) for a, b in Y}
    g = {}
    for p in X:
        img = I.get(f[p])
        g[p] = inv.get(img) if img is not None else None
    return GMConstruction(r, k, X, Y, f, I, g, area, hp)


def gm_check(con: GMConstruction) -> dict[str, bool]:
    """The properties the construction must satisfy, by name."""
    ys = set(con.Y)
    f_bij = len(set(con.f.values())) == len(con.X) == len(con.Y) and set(con.f.values()) == ys
    stats = all(con.wt(con.f[p]) == (con.area[p], con.h_plus[p]) for p in con.X)
    i_inv = all(con.I[con.I[y]] == y and con.wt(con.I[y]) == con.wt(y)[::-1] for y in con.Y)
    g_inv = f_bij and all(con.g[p] is not None and con.g[con.g[p]] == p for p in con.X)
    g_swap = g_inv and all(
        (con.area[con.g[p]], con.h_plus[con.g[p]]) == (con.h_plus[p], con.area[p]) for p in con.X
    )
    brute = rs_genfun(con.r, 3)
    gf = con.genfun()
    return {
        "f_bijective": f_bij,
        "f_stats": stats,
        "I_involution": i_inv,
        "g_involution": g_inv,
        "g_swaps_stats": g_swap,
        "matches_brute_force": gf == brute,
        "symmetric": gf.is_symmetric(),
    }
