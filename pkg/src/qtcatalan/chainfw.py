"""Chain decompositions of weighted sets and the bijections they induce.

A chain system is a finite set W with statistics a, d, a set I of initial
objects, a set T of terminal objects and a bijection f: W\\T -> W\\I that
lowers a by one and raises d by one.  W then splits into f-chains running
from I to T.  If the generating functions satisfy C_T(q,t) = C_I(t,q), then
C_W is symmetric, and any stat-transposing bijection h: T -> I can be turned
into an involution J of W that swaps a and d.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Optional

from .errors import InvalidChainMap, MidlineViolation, NoSuchBijection
from .qtpoly import Poly, RatFunc, one_minus, q, t


class ChainSystem:
    """Immutable chain system; the chain-map properties are checked on construction."""

    def __init__(
        self,
        elements: Iterable[Hashable],
        a: Mapping,
        d: Mapping,
        chain_map: Mapping,
        terminal: Iterable[Hashable],
        initial: Optional[Iterable[Hashable]] = None,
        key: Optional[Callable] = None,
    ):
        elements = list(elements)
        if len(set(elements)) != len(elements):
            raise InvalidChainMap("duplicate elements")
        try:
            ordered = sorted(elements, key=key)
        except TypeError:
            ordered = elements
        self.elements: tuple = tuple(ordered)
        self._rank = {w: i for i, w in enumerate(self.elements)}
        self.a = {w: a[w] for w in self.elements}
        self.d = {w: d[w] for w in self.elements}
        self.f = dict(chain_map)
        self.T = frozenset(terminal)
        universe = set(self.elements)
        if not self.T <= universe:
            raise InvalidChainMap("terminal set is not a subset of the elements")
        domain = universe - self.T
        if set(self.f) != domain:
            raise InvalidChainMap("chain map domain differs from W \\ T")
        image = list(self.f.values())
        if len(set(image)) != len(image):
            raise InvalidChainMap("chain map is not injective")
        if not set(image) <= universe:
            raise InvalidChainMap("chain map leaves the element set")
        derived_initial = frozenset(universe - set(image))
        if initial is not None and frozenset(initial) != derived_initial:
            raise InvalidChainMap("initial set differs from W minus the image of f")
        self.I = derived_initial
        for w, fw in self.f.items():
            if self.a[fw] != self.a[w] - 1 or self.d[fw] != self.d[w] + 1:
                raise InvalidChainMap(
                    f"f({w!r}) = {fw!r} shifts (a, d) by "
                    f"({self.a[fw] - self.a[w]}, {self.d[fw] - self.d[w]}), not (-1, +1)"
                )

    @classmethod
    def from_function(cls, elements, stats: Callable, chain_map: Callable, terminal, key=None):
        """Build a system from callables: stats(w) -> (a, d) and chain_map(w) for w not in T."""
        elements = list(elements)
        terminal = frozenset(terminal)
        a, d = {}, {}
        for w in elements:
            a[w], d[w] = stats(w)
        f = {w: chain_map(w) for w in elements if w not in terminal}
        return cls(elements, a, d, f, terminal, key=key)

    def rank(self, w) -> int:
        """Position of w in the system's deterministic element order."""
        return self._rank[w]

    def ordered(self, subset) -> list:
        return sorted(subset, key=self._rank.__getitem__)

    def bidegree(self, w) -> tuple[int, int]:
        return self.a[w], self.d[w]

    def genfun(self, subset=None) -> Poly:
        subset = self.elements if subset is None else subset
        return Poly.from_counts(self.bidegree(w) for w in subset)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass
class ChainDecomposition:
    chains: list[tuple]
    initial: list
    terminal: list

    def lengths(self) -> list[int]:
        """Number of arrows in each chain."""
        return [len(c) - 1 for c in self.chains]

    def to_json(self, label: Callable = str) -> dict:
        return {
            "chains": [[label(w) for w in c] for c in self.chains],
            "I": [label(w) for w in self.initial],
            "T": [label(w) for w in self.terminal],
        }


def decompose_chains(s: ChainSystem) -> ChainDecomposition:
    chains = []
    covered = set()
    limit = len(s)
    for w0 in s.ordered(s.I):
        chain = [w0]
        w = w0
        while w not in s.T:
            w = s.f[w]
            chain.append(w)
            if len(chain) > limit:
                raise InvalidChainMap(f"f-iteration from {w0!r} never reaches T")
        covered.update(chain)
        chains.append(tuple(chain))
    if len(covered) != len(s) or sum(map(len, chains)) != len(s):
        raise InvalidChainMap("f-chains do not partition the element set")
    return ChainDecomposition(chains, s.ordered(s.I), s.ordered(s.T))


def endpoint_genfuns(s: ChainSystem) -> tuple[Poly, Poly, Poly]:
    """(C_I, C_T, C_W) with a as the q-exponent and d as the t-exponent."""
    return s.genfun(s.I), s.genfun(s.T), s.genfun()


def endpoint_identity_holds(s: ChainSystem) -> bool:
    """Check C_W = C_I/(1 - t/q) + C_T/(1 - q/t) exactly.

    The right side is evaluated as a fraction, compared with C_W by
    cross-multiplication, and reduced to a polynomial by exact division.
    """
    c_i, c_t, c_w = endpoint_genfuns(s)
    rhs = RatFunc(c_i) / one_minus(t, q) + RatFunc(c_t) / one_minus(q, t)
    if rhs != RatFunc(c_w):
        return False
    return rhs.to_poly() == c_w


def verify_symmetry_via_chains(s: ChainSystem) -> bool:
    """True iff C_T(q,t) = C_I(t,q); on success also checks the conclusion C_W(q,t) = C_W(t,q)."""
    decompose_chains(s)
    c_i, c_t, c_w = endpoint_genfuns(s)
    if not endpoint_identity_holds(s):
        raise InvalidChainMap("C_W differs from C_I/(1-t/q) + C_T/(1-q/t)")
    if c_t != c_i.swap():
        return False
    if not c_w.is_symmetric():
        raise InvalidChainMap("endpoint symmetry holds but C_W is not symmetric")
    return True


def coeff_from_endpoints(s: ChainSystem, j: int, k: int) -> int:
    """Coefficient of q^j t^k in C_W, counted from chain endpoints only.

    Chains of total degree j+k that start at q-degree >= j, minus those that
    end at q-degree > j.
    """
    total = j + k
    starts = sum(1 for w in s.I if s.a[w] + s.d[w] == total and s.a[w] >= j)
    ends = sum(1 for w in s.T if s.a[w] + s.d[w] == total and s.a[w] > j)
    return starts - ends


def canonical_h(s: ChainSystem) -> dict:
    """A bijection h: T -> I with (a, d)(h(w)) = (d, a)(w).

    Within each bidegree class both sides are sorted in the system's element
    order and matched positionally.
    """
    by_deg_t = defaultdict(list)
    by_deg_i = defaultdict(list)
    for w in s.ordered(s.T):
        by_deg_t[s.bidegree(w)].append(w)
    for w in s.ordered(s.I):
        by_deg_i[s.bidegree(w)].append(w)
    h = {}
    for (a, d), ts in by_deg_t.items():
        targets = by_deg_i.get((d, a), [])
        if len(targets) != len(ts):
            raise NoSuchBijection(
                f"{len(ts)} terminal objects of bidegree {(a, d)} but "
                f"{len(targets)} initial objects of bidegree {(d, a)}"
            )
        h.update(zip(ts, targets))
    if len(h) != len(s.I):
        raise NoSuchBijection("C_T(q,t) != C_I(t,q)")
    return h


def _check_h(s: ChainSystem, h: Mapping) -> None:
    if set(h) != set(s.T) or set(h.values()) != set(s.I) or len(set(h.values())) != len(h):
        raise NoSuchBijection("h is not a bijection T -> I")
    for w, v in h.items():
        if s.bidegree(v) != s.bidegree(w)[::-1]:
            raise NoSuchBijection(f"h({w!r}) = {v!r} does not transpose (a, d)")


@dataclass(frozen=True)
class Dot:
    element: Hashable
    x: int
    y: int
    color: str  # "black" or "white"


@dataclass
class CycleDrawing:
    """The lattice drawing of one cycle of f ∪ h."""

    dots: list[Dot] = field(default_factory=list)

    def to_json(self, label: Callable = str) -> list[dict]:
        return [{"id": label(p.element), "x": p.x, "y": p.y, "color": p.color} for p in self.dots]


def _cycles(s: ChainSystem, h: Mapping) -> list[list]:
    succ = dict(s.f)
    succ.update(h)
    seen = set()
    cycles = []
    for w in s.elements:
        if w in seen:
            continue
        cyc = [w]
        v = succ[w]
        while v != w:
            cyc.append(v)
            v = succ[v]
        seen.update(cyc)
        cycles.append(cyc)
    return cycles


def _draw(s: ChainSystem, cyc: list, start=None) -> CycleDrawing:
    excess = {w: s.a[w] - s.d[w] for w in cyc}
    starts = [w for w in cyc if w in s.I]
    best = max(excess[w] for w in starts)
    candidates = [w for w in starts if excess[w] == best]
    if start is not None and start in candidates:
        w0 = start
    else:
        w0 = min(candidates, key=s.rank)
    i0 = cyc.index(w0)
    walk = cyc[i0:] + cyc[:i0]
    y0 = excess[w0]
    if y0 <= 0:
        raise InvalidChainMap("cycle start does not have a > d")
    dots = [Dot(w0, 0, y0, "black")]
    for i in range(len(walk) - 1):
        cur = dots[-1]
        nxt = walk[i + 1]
        if walk[i] not in s.T:
            if cur.y == 0:
                y, color = 2, "white"
            elif cur.color == "black" and cur.y > 1:
                y, color = cur.y - 2, "black"
            elif cur.color == "black":
                y, color = 1, "white"
            else:
                y, color = cur.y + 2, "white"
        else:
            y, color = cur.y, ("white" if cur.color == "black" else "black")
        dots.append(Dot(nxt, i + 1, y, color))
    for p in dots:
        e = excess[p.element]
        if p.y != abs(e) or (e > 0 and p.color != "black") or (e < 0 and p.color != "white"):
            raise InvalidChainMap(f"drawing invariant fails at {p.element!r}")
    last = dots[-1]
    if last.color != "white" or last.y != y0 or any(p.y > y0 for p in dots):
        raise InvalidChainMap("cycle drawing does not close at its starting height")
    return CycleDrawing(dots)


def cycle_drawings(s: ChainSystem, h: Mapping, start=None) -> list[CycleDrawing]:
    """Drawings of the non-trivial cycles of f ∪ h (cycles where some a != d).

    ``start`` optionally picks the starting vertex of the cycle containing it,
    provided it is an admissible choice; otherwise the smallest admissible
    element in system order is used.
    """
    _check_h(s, h)
    out = []
    for cyc in _cycles(s, h):
        if all(s.a[w] == s.d[w] for w in cyc):
            continue
        out.append(_draw(s, cyc, start))
    return out


def build_involution_J(s: ChainSystem, h: Mapping, start=None) -> dict:
    """The involution of W built from f and h by matching dots in the cycle drawings."""
    J = {w: w for w in s.elements if s.a[w] == s.d[w]}
    for drawing in cycle_drawings(s, h, start):
        dots = drawing.dots
        for i, p in enumerate(dots):
            if p.color != "black" or p.y == 0:
                continue
            partner = next((r for r in dots[i + 1:] if r.y == p.y), None)
            if partner is None or partner.color != "white":
                raise InvalidChainMap(f"no white partner for {p.element!r}")
            J[p.element] = partner.element
            J[partner.element] = p.element
    if len(J) != len(s):
        raise InvalidChainMap("J is not defined on every element")
    return J


def reattached_chains(s: ChainSystem, h: Mapping) -> list[tuple]:
    """Chains symmetric about the midline a = d.

    For each w in T, the top half (a >= d) of the f-chain starting at h(w) is
    glued to the bottom half (a < d) of the f-chain ending at w.
    """
    _check_h(s, h)
    bad = [w for w in s.I if s.a[w] < s.d[w]]
    if bad:
        raise MidlineViolation(f"{len(bad)} initial objects lie below the midline")
    dec = decompose_chains(s)
    by_start = {c[0]: c for c in dec.chains}
    by_end = {c[-1]: c for c in dec.chains}
    out = []
    for w in s.ordered(s.T):
        top = [v for v in by_start[h[w]] if s.a[v] >= s.d[v]]
        bottom = [v for v in by_end[w] if s.a[v] < s.d[v]]
        out.append(tuple(top + bottom))
    return out


def reattach_chains(s: ChainSystem, h: Mapping) -> dict:
    """Midline-reflection involution on the reattached chains."""
    J = {}
    for chain in reattached_chains(s, h):
        for i, w in enumerate(chain):
            J[w] = chain[len(chain) - 1 - i]
    if len(J) != len(s):
        raise InvalidChainMap("reattached chains do not cover W")
    for w, v in J.items():
        if s.bidegree(v) != s.bidegree(w)[::-1]:
            raise InvalidChainMap(f"reattached chain through {w!r} is not symmetric")
    return J


def is_stat_swapping_involution(s: ChainSystem, J: Mapping) -> bool:
    return all(J[J[w]] == w and s.bidegree(J[w]) == s.bidegree(w)[::-1] for w in s.elements)


def excess_multiset_symmetric(s: ChainSystem) -> bool:
    """In each total degree, the multiset of d - a equals its negation."""
    by_degree = defaultdict(Counter)
    for w in s.elements:
        by_degree[s.a[w] + s.d[w]][s.d[w] - s.a[w]] += 1
    return all(all(cnt[-x] == c for x, c in cnt.items()) for cnt in by_degree.values())


def to_dot(s: ChainSystem, h: Optional[Mapping] = None, label: Callable = str) -> str:
    """Graphviz digraph of f (solid) and h (dashed)."""
    lines = ["digraph chains {"]
    for w in s.elements:
        lines.append(f'  "{label(w)}" [label="{label(w)}\\n(a={s.a[w]}, d={s.d[w]})"];')
    for w in s.elements:
        if w in s.f:
            lines.append(f'  "{label(w)}" -> "{label(s.f[w])}";')
    for w, v in (h or {}).items():
        lines.append(f'  "{label(w)}" -> "{label(v)}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
