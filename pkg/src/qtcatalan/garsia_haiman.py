"""Partitions, cell statistics and the Garsia-Haiman formula for AC_n^(m)(q, t).

The formula is a sum of rational functions whose denominators w_mu are
products of binomials q^x - t^y.  Every such binomial splits into
homogenized cyclotomic factors Phi_d(q^x', t^y') with x = g x', y = g y',
d | g.  Working with those factors gives an exact least common denominator,
so the sum can be formed over it and divided out factor by factor.  The
naive route (adding RatFunc values) is kept for cross-checks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterator, Sequence

from .qtpoly import ONE, Poly, RatFunc, one_minus, q, t

# ----------------------------------------------------------------- partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, col), 1-based, row 1 on top."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int) -> list[Partition]:
    """Par(n) in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(rest, cap), 0, -1):
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


@dataclass(frozen=True)
class CellData:
    cell: tuple
    arm: int
    coarm: int
    leg: int
    coleg: int


def cell_stats(mu: Partition) -> list[CellData]:
    conj = mu.conjugate().parts
    return [
        CellData((i, j), mu.parts[i - 1] - j, j - 1, conj[j - 1] - i, i - 1)
        for i, j in mu.cells()
    ]


def mu_quantities(mu: Partition) -> tuple[Poly, Poly, Poly, Poly]:
    """(T_mu, B_mu, Pi_mu, w_mu) as polynomials."""
    cs = cell_stats(mu)
    T = Poly.monomial(sum(c.coarm for c in cs), sum(c.coleg for c in cs))
    B = Poly.from_counts((c.coarm, c.coleg) for c in cs)
    Pi = ONE
    w = ONE
    for c in cs:
        if c.cell != (1, 1):
            Pi = Pi * (ONE - Poly.monomial(c.coarm, c.coleg))
        w = w * (Poly.monomial(c.arm, 0) - Poly.monomial(0, c.leg + 1))
        w = w * (Poly.monomial(0, c.leg) - Poly.monomial(c.arm + 1, 0))
    return T, B, Pi, w


# ----------------------------------------------------- binomial factorization

Atom = tuple[int, int, int]  # (x', y', d): Phi_d homogenized at (q^x', t^y')


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients of Phi_d(x), constant term first."""
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _div_int_poly(num, list(cyclotomic(e)))
    return tuple(num)


def _div_int_poly(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(a[i + len(b) - 1], lead)
        if r:
            raise ArithmeticError("inexact cyclotomic division")
        out[i] = c
        for k, bk in enumerate(b):
            a[i + k] -= c * bk
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


def binomial_atoms(x: int, y: int) -> list[Atom]:
    """Factors of q^x - t^y (x, y not both 0)."""
    if x < 0 or y < 0 or (x == 0 and y == 0):
        raise ValueError(f"q^{x} - t^{y} is not a usable binomial")
    g = gcd(x, y)
    xp, yp = x // g, y // g
    return [(xp, yp, d) for d in range(1, g + 1) if g % d == 0]


@lru_cache(maxsize=None)
def atom_poly(atom: Atom) -> Poly:
    xp, yp, d = atom
    coeffs = cyclotomic(d)
    deg = len(coeffs) - 1
    return Poly({(xp * i, yp * (deg - i)): c for i, c in enumerate(coeffs) if c})


def _atoms_product(atoms: Counter) -> Poly:
    out = ONE
    for a, k in sorted(atoms.items()):
        for _ in range(k):
            out = out * atom_poly(a)
    return out


@dataclass
class _Term:
    """sign * mono * prod(num_polys) * prod(num_atoms) / prod(den_atoms)."""

    sign: int
    mono: tuple
    num_polys: list
    num_atoms: Counter
    den_atoms: Counter

    def cancel(self):
        common = self.num_atoms & self.den_atoms
        self.num_atoms -= common
        self.den_atoms -= common

    def numerator(self) -> Poly:
        p = Poly.monomial(self.mono[0], self.mono[1], self.sign)
        for f in self.num_polys:
            p = p * f
        return p * _atoms_product(self.num_atoms)


def _summand_term(mu: Partition, m: int) -> _Term:
    cs = cell_stats(mu)
    T = (sum(c.coarm for c in cs), sum(c.coleg for c in cs))
    num_atoms: Counter = Counter()
    den_atoms: Counter = Counter()
    num_polys = [Poly.from_counts((c.coarm, c.coleg) for c in cs)]
    # (1 - q)(1 - t) = -(q^1 - t^0)(q^0 - t^1)
    sign = -1
    num_atoms.update(binomial_atoms(1, 0))
    num_atoms.update(binomial_atoms(0, 1))
    for c in cs:
        if c.cell == (1, 1):
            continue
        if c.coarm and c.coleg:
            num_polys.append(ONE - Poly.monomial(c.coarm, c.coleg))
        elif c.coleg == 0:  # 1 - q^a' = -(q^a' - 1)
            sign = -sign
            num_atoms.update(binomial_atoms(c.coarm, 0))
        else:  # 1 - t^l' = q^0 - t^l'
            num_atoms.update(binomial_atoms(0, c.coleg))
    for c in cs:
        den_atoms.update(binomial_atoms(c.arm, c.leg + 1))
        # t^l - q^(a+1) = -(q^(a+1) - t^l)
        sign = -sign
        den_atoms.update(binomial_atoms(c.arm + 1, c.leg))
    term = _Term(sign, ((m + 1) * T[0], (m + 1) * T[1]), num_polys, num_atoms, den_atoms)
    term.cancel()
    return term


def _sum_terms(terms: Sequence[_Term]) -> Poly:
    lcm: Counter = Counter()
    for tm in terms:
        lcm |= tm.den_atoms
    total = Poly()
    for tm in terms:
        total = total + tm.numerator() * _atoms_product(lcm - tm.den_atoms)
    for a, k in sorted(lcm.items(), key=lambda kv: -atom_poly(kv[0]).degree()):
        for _ in range(k):
            total = total.exact_div(atom_poly(a))
    return total


def ac_genfun(n: int, m: int) -> Poly:
    """AC_n^(m)(q, t) from the Garsia-Haiman sum, as an exact polynomial."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    result = _sum_terms([_summand_term(mu, m) for mu in partitions(n)])
    if any(c < 0 for c in result.terms.values()):
        raise ArithmeticError(f"AC_{n}^({m}) has a negative coefficient")
    return result


def summand(mu: Partition, m: int) -> RatFunc:
    T, B, Pi, w = mu_quantities(mu)
    return RatFunc(T ** (m + 1) * (ONE - q) * (ONE - t) * B * Pi, w)


def ac_genfun_direct(n: int, m: int, order: str = "forward") -> RatFunc:
    """The Garsia-Haiman sum as a RatFunc, accumulated left to right or as a balanced tree."""
    terms = [summand(mu, m) for mu in partitions(n)]
    if order == "forward":
        return reduce(lambda a, b: a + b, terms)
    if order == "reverse":
        return reduce(lambda a, b: a + b, reversed(terms))
    if order == "tree":
        while len(terms) > 1:
            terms = [terms[i] + terms[i + 1] if i + 1 < len(terms) else terms[i]
                     for i in range(0, len(terms), 2)]
        return terms[0]
    raise ValueError(f"unknown order {order!r}")


def summand_report(n: int, m: int) -> list[dict]:
    """Per-partition ingredients, for inspecting the formula."""
    rows = []
    for mu in partitions(n):
        T, B, Pi, w = mu_quantities(mu)
        rows.append({
            "mu": list(mu.parts),
            "T": T.to_json(),
            "B": B.to_json(),
            "Pi": Pi.to_json(),
            "w": w.to_json(),
        })
    return rows


# ------------------------------------------------------------ closed forms

SIGMA_CASES = ("C3", "AC4", "C_2m1_2_2", "C_4m1_4_1")


def _mono(j: int, k: int) -> RatFunc:
    return RatFunc(Poly.monomial(j, k))


def _rf(num, den=ONE) -> RatFunc:
    return RatFunc(num, den)


def sigma_expression(case: str, m: int) -> RatFunc:
    """The named closed expression, as an unreduced fraction."""
    if case == "C3":
        a = _mono(3 * m, 0) / (one_minus(t, q ** 2) * one_minus(t, q))
        b = _mono(m, m) * _rf(ONE + q + t) / (one_minus(t ** 2, q) * one_minus(q ** 2, t))
        return a.sigma() + b
    if case == "AC4":
        a = _mono(6 * m, 0) / (one_minus(t, q) * one_minus(t, q ** 2) * one_minus(t, q ** 3))
        inner = _rf(t, q) + _rf(t, q ** 2) + _rf(t, q ** 3) + _rf(t ** 2, q ** 3)
        b = _mono(3 * m, m) * inner / (one_minus(t ** 2, q ** 2) * one_minus(t, q) * one_minus(t, q ** 3))
        c = _mono(2 * m + 2, 2 * m + 2) * _rf(ONE - q * t) / _rf(
            (q - t ** 2) * (t - q ** 2) * (q - t) * (t - q))
        return a.sigma() - b.sigma() + c
    if case == "C_2m1_2_2":
        a = _mono(6 * m + 8, 0) / _rf((q - t) * (q ** 2 - t) * (q ** 3 - t))
        b = _mono(3 * m + 4, m + 1) * _rf(ONE + q) / _rf((q - t) ** 2 * (q ** 3 - t))
        c = _mono(2 * m + 2, 2 * m + 2) * _rf(q ** 2 * t + q * t ** 2 - q ** 2 - t ** 2) / _rf(
            (q - t) ** 2 * (q ** 2 - t) * (t ** 2 - q))
        return (a - b).sigma() + c
    if case == "C_4m1_4_1":
        a = _mono(6 * m + 3, 0) / _rf((q - t) * (q ** 2 - t) * (q ** 3 - t))
        b = _mono(3 * m + 1, m) * _rf(t + q * t + q ** 2 + q ** 2 * t) / _rf(
            (q - t) * (q ** 2 - t ** 2) * (q ** 3 - t))
        c = _mono(2 * m + 1, 2 * m + 1) * _rf(q * t - ONE) / _rf(
            (q - t) ** 2 * (q ** 2 - t) * (t ** 2 - q))
        return (a - b).sigma() + c
    raise ValueError(f"unknown closed form {case!r}; expected one of {SIGMA_CASES}")


def sigma_form(case: str, m: int) -> Poly:
    """The named closed expression reduced to a polynomial by exact division."""
    if m < 1:
        raise ValueError("m must be positive")
    return sigma_expression(case, m).to_poly()
