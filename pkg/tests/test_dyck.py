from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtcatalan.dyck import (
    MDyckWord, area_of, dinv_of, enumerate_words, format_word, fuss_catalan, genfun,
    is_m_dyck, iter_gammas, parse_word, sc,
)
from qtcatalan.qtpoly import Poly, q, t


def q_int(k):
    return [1] * k


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        out[i] = a[i + len(b) - 1] // b[-1]
        for j, y in enumerate(b):
            a[i + j] -= out[i] * y
    assert not any(a), "inexact"
    return out


def q_fuss_catalan(n, m):
    """[(m+1)n choose n]_q / [mn+1]_q as a coefficient list."""
    num, den = [1], [1]
    for i in range(1, n + 1):
        num = poly_mul(num, q_int(m * n + n - i + 1))
        den = poly_mul(den, q_int(i))
    return poly_div(poly_div(num, den), q_int(m * n + 1))


def specialize(p: Poly, shift: int):
    """Coefficient list of q^shift * p(q, 1/q)."""
    out = {}
    for (j, k), c in p.terms.items():
        out[j - k + shift] = out.get(j - k + shift, 0) + c
    assert min(out) >= 0
    return [out.get(i, 0) for i in range(max(out) + 1)]


def test_sc_cases():
    m = 3
    assert [sc(m, p) for p in (-4, -3, -1, 0, 1, 2, 3, 4)] == [0, 0, 2, 3, 3, 2, 1, 0]
    # m = 1 counts pairs whose difference is 0 or 1
    assert [sc(1, p) for p in (-2, -1, 0, 1, 2)] == [0, 0, 1, 1, 0]


def test_small_words():
    assert [w.gamma for w in enumerate_words(2, 2)] == [(0, 0), (0, 1), (0, 2)]
    assert is_m_dyck((0, 2, 4), 2)
    assert not is_m_dyck((0, 3), 2)
    assert not is_m_dyck((1,), 1)
    with pytest.raises(ValueError):
        MDyckWord((0, 5), 1)


def test_c3_and_c2():
    assert genfun(3, 1) == t**3 + q * t + q * t**2 + q**2 * t + q**3
    for m in range(1, 11):
        assert genfun(2, m) == Poly({(i, m - i): 1 for i in range(m + 1)})


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 4)])
def test_counts_are_fuss_catalan(n, m):
    assert len(iter_gammas(n, m)) == fuss_catalan(n, m) == comb((m + 1) * n, n) // (m * n + 1)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 4)])
def test_q_inverse_q_specialization(n, m):
    assert specialize(genfun(n, m), m * comb(n, 2)) == q_fuss_catalan(n, m)


def test_zero_word_has_maximal_dinv():
    # the all-zero word has dinv = m * binom(n, 2)
    for n in range(1, 6):
        for m in range(1, 4):
            assert dinv_of((0,) * n, m) == m * comb(n, 2)


def test_format_round_trip():
    assert format_word((0, 2, 4, 6), compact=True) == "246"
    assert format_word((0, 12, 3), compact=True) == "0,12,3"
    assert format_word((0,), compact=True) == "()"
    assert format_word((0, 0), compact=True) == "0"
    for g in [(0, 2, 4, 6), (0, 12, 3), (0,), (0, 0)]:
        assert parse_word(format_word(g, compact=True)) == g
        if len(g) > 1:
            assert parse_word(format_word(g)) == g


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4))
def test_symmetry_direct(n, m):
    assert genfun(n, m).is_symmetric()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_area_dinv_consistent(m, data):
    n = data.draw(st.integers(1, 5))
    words = iter_gammas(n, m)
    g = data.draw(st.sampled_from(words))
    w = MDyckWord(g, m)
    assert area_of(g) == sum(g)
    assert 0 <= dinv_of(g, m) <= m * comb(n, 2)
    assert w.n == n
