"""Exact bivariate polynomials in q and t over the integers, and their fractions.

A :class:`Poly` is a sparse map ``(j, k) -> c`` standing for the sum of
``c * q**j * t**k``.  Coefficients are Python ints, so intermediate values never
overflow.  :class:`RatFunc` is a quotient of two polynomials, reduced only by
integer content and common monomial factors; equality is decided by
cross-multiplication.

Expressions such as ``1 - t/q`` are never stored as Laurent polynomials: build
them with :func:`one_minus`, which clears the denominator to ``(q - t)/q``.
"""

from __future__ import annotations

import heapq
from functools import reduce
from math import gcd
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, NotPolynomial

Monomial = tuple[int, int]


def grlex_key(mon: Monomial) -> tuple[int, int]:
    """Sort key for graded lexicographic order with q > t (larger key = leading)."""
    return (mon[0] + mon[1], mon[0])


class Poly:
    """Immutable sparse polynomial in q, t with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], Iterable[tuple[Monomial, int]], None] = None):
        acc: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mon, c in items:
                j, k = mon
                if j < 0 or k < 0:
                    raise ValueError(f"negative exponent in monomial {mon!r}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient must be an int, got {type(c).__name__}")
                key = (int(j), int(k))
                acc[key] = acc.get(key, 0) + c
        self._terms = {mon: c for mon, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Poly":
        # caller guarantees: valid monomials, no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, j: int = 0, k: int = 0, c: int = 1) -> "Poly":
        return cls({(j, k): c})

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def from_counts(cls, pairs: Iterable[Monomial]) -> "Poly":
        """Sum of q**a t**d over an iterable of exponent pairs (with multiplicity)."""
        acc: dict[Monomial, int] = {}
        for mon in pairs:
            acc[mon] = acc.get(mon, 0) + 1
        return cls(acc)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def coeff(self, j: int, k: int) -> int:
        return self._terms.get((j, k), 0)

    def __getitem__(self, mon: Monomial) -> int:
        return self._terms.get(tuple(mon), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((j + k for j, k in self._terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=grlex_key)

    def leading_coefficient(self) -> int:
        return self._terms[self.leading_monomial()]

    def content(self) -> int:
        return reduce(gcd, self._terms.values(), 0)

    def is_constant(self) -> bool:
        return all(mon == (0, 0) for mon in self._terms)

    def antidiagonal(self, d: int) -> list[int]:
        """Coefficients of q^d t^0, q^(d-1) t^1, ..., q^0 t^d."""
        return [self._terms.get((d - i, i), 0) for i in range(d + 1)]

    def evaluate(self, q, t):
        return sum(c * q**j * t**k for (j, k), c in self._terms.items())

    def swap(self) -> "Poly":
        """The polynomial with q and t interchanged."""
        return Poly._wrap({(k, j): c for (j, k), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return all(self._terms.get((k, j)) == c for (j, k), c in self._terms.items())

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for mon, c in other._terms.items():
            v = acc.get(mon, 0) + c
            if v:
                acc[mon] = v
            else:
                acc.pop(mon, None)
        return Poly._wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap({mon: -c for mon, c in self._terms.items()})

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly()
            return Poly._wrap({mon: c * other for mon, c in self._terms.items()})
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict[Monomial, int] = {}
        get = acc.get
        for (j2, k2), c2 in b.items():
            for (j1, k1), c1 in a.items():
                key = (j1 + j2, k1 + k2)
                acc[key] = get(key, 0) + c1 * c2
        return Poly._wrap({mon: c for mon, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, j: int, k: int) -> "Poly":
        """Multiply by the monomial q^j t^k (exponents may be negative if the result stays valid)."""
        out = {}
        for (a, b), c in self._terms.items():
            if a + j < 0 or b + k < 0:
                raise ValueError("shift would produce a negative exponent")
            out[(a + j, b + k)] = c
        return Poly._wrap(out)

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Multivariate division by one polynomial under grlex order.

        Terms of the running remainder whose monomial is not a multiple of the
        divisor's leading monomial, or whose coefficient is not an integer
        multiple of its leading coefficient, are moved to the remainder.
        """
        if not divisor:
            raise DivisionByZero("division by the zero polynomial")
        lm = divisor.leading_monomial()
        lc = divisor._terms[lm]
        tail = [(mon, c) for mon, c in divisor._terms.items() if mon != lm]
        work = dict(self._terms)
        heap = [(-a - b, -a, (a, b)) for (a, b) in work]
        heapq.heapify(heap)
        quotient: dict[Monomial, int] = {}
        remainder: dict[Monomial, int] = {}
        while heap:
            _, _, mon = heapq.heappop(heap)
            c = work.pop(mon, 0)
            if not c:
                continue
            dj, dk = mon[0] - lm[0], mon[1] - lm[1]
            if dj < 0 or dk < 0 or c % lc:
                remainder[mon] = c
                continue
            qc = c // lc
            quotient[(dj, dk)] = qc
            for (a, b), tc in tail:
                key = (a + dj, b + dk)
                old = work.get(key)
                if old is None:
                    work[key] = -qc * tc
                    heapq.heappush(heap, (-key[0] - key[1], -key[0], key))
                else:
                    work[key] = old - qc * tc
        return Poly._wrap(quotient), Poly._wrap(remainder)

    def exact_div(self, divisor: "Poly") -> "Poly":
        quotient, remainder = self.divmod(divisor)
        if remainder:
            raise NotPolynomial(f"nonzero remainder with {len(remainder)} terms")
        return quotient

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in pure lex order with q > t, largest first."""
        return sorted(self._terms.items(), key=lambda item: (-item[0][0], -item[0][1]))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def to_json(self) -> dict:
        terms = sorted(self._terms.items(), key=lambda item: (-item[0][0], item[0][1]))
        return {"terms": [{"q": j, "t": k, "c": str(c)} for (j, k), c in terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        return cls({(int(e["q"]), int(e["t"])): int(e["c"]) for e in data["terms"]})


def _monomial_text(j: int, k: int) -> str:
    parts = []
    if j:
        parts.append("q" if j == 1 else f"q^{j}")
    if k:
        parts.append("t" if k == 1 else f"t^{k}")
    return " ".join(parts)


def format_poly(p: Poly) -> str:
    """Human-readable text, e.g. ``q^3 + q^2 t + q t^2 + q t + t^3``."""
    if not p:
        return "0"
    out = []
    for (j, k), c in p.sorted_terms():
        mono = _monomial_text(j, k)
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag} {mono}" if mono else str(mag))
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


q = Poly.monomial(1, 0)
t = Poly.monomial(0, 1)
ONE = Poly.constant(1)
ZERO = Poly()


class RatFunc:
    """Quotient of two polynomials.

    Normal form divides out the integer content shared by numerator and
    denominator and any common monomial factor, and makes the denominator's
    grlex-leading coefficient positive.  No polynomial GCD is taken, so two
    equal fractions may have different representations.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        g = gcd(num.content(), den.content())
        if den.leading_coefficient() < 0:
            g = -g
        mj = min(j for j, _ in list(num._terms) + list(den._terms))
        mk = min(k for _, k in list(num._terms) + list(den._terms))
        if g != 1 or mj or mk:
            num = Poly._wrap({(j - mj, k - mk): c // g for (j, k), c in num._terms.items()})
            den = Poly._wrap({(j - mj, k - mk): c // g for (j, k), c in den._terms.items()})
        self.num, self.den = num, den

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise DivisionByZero("division by the zero fraction")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den**-e, self.num**-e)
        return RatFunc(self.num**e, self.den**e)

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def swap(self) -> "RatFunc":
        return RatFunc(self.num.swap(), self.den.swap())

    def sigma(self) -> "RatFunc":
        """F(q,t) + F(t,q)."""
        return self + self.swap()

    def to_poly(self) -> Poly:
        return self.num.exact_div(self.den)

    def __repr__(self) -> str:
        return f"RatFunc(({self.num}) / ({self.den}))"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.constant(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Poly")


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (Poly, int)):
        return RatFunc(x)
    return NotImplemented


def one_minus(num: Poly, den: Poly) -> RatFunc:
    """1 - num/den as a polynomial fraction, e.g. 1 - t/q -> (q - t)/q."""
    return RatFunc(den - num, den)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def ratfun_arith(a, b, op: str) -> RatFunc:
    a, b = _as_ratfunc(a), _as_ratfunc(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown fraction operation {op!r}")


def poly_swap_qt(a: Poly) -> Poly:
    return a.swap()


def sigma(f) -> RatFunc:
    return _as_ratfunc(f).sigma()


def ratfun_to_poly(a) -> Poly:
    return _as_ratfunc(a).to_poly()


def poly_antidiagonal(a: Poly, d: int) -> list[int]:
    return a.antidiagonal(d)


def is_unimodal(seq) -> bool:
    """Weakly increasing then weakly decreasing."""
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i >= n - 1
