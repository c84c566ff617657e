"""The ten acceptance criteria, each with its runtime budget.

Run under pytest (a PASS/FAIL line per criterion appears in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import time

import pytest

from qtcatalan import chainfw as cf
from qtcatalan import garsia_haiman as gh
from qtcatalan import mchains as mc
from qtcatalan import ratslope as rs
from qtcatalan.dyck import fuss_catalan, genfun
from qtcatalan.qtpoly import Poly, is_unimodal, q, t
from qtcatalan.verify import (
    WORKED_FOUR_J, WORKED_FOUR_REATTACHED, WORKED_SMALL_J, random_chain_system,
    worked_system_four_chains, worked_system_small,
)

RESULTS = {}


def _pairs(d):
    out = {}
    for u, v in d.items():
        out[u] = v
        out[v] = u
    return out


def _unimodal_everywhere(p):
    return all(is_unimodal(p.antidiagonal(d)) for d in range(p.degree() + 1))


def criterion_1():
    assert genfun(3, 1) == t**3 + q * t + q * t**2 + q**2 * t + q**3
    for m in range(1, 11):
        assert genfun(2, m) == Poly({(i, m - i): 1 for i in range(m + 1)})


def criterion_2():
    s = mc.build_system(4, 2)
    assert len(s) == 55
    assert sorted(cf.decompose_chains(s).lengths(), reverse=True) == [12, 9, 7, 7, 5, 3] + [0] * 6
    c_i, c_t, _ = cf.endpoint_genfuns(s)
    assert c_i == Poly.from_counts([(12, 0), (10, 1), (7, 2), (6, 3), (8, 2), (9, 1),
                                    (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (4, 4)])
    assert c_t == Poly.from_counts([(0, 12), (1, 10), (2, 7), (3, 6), (1, 9), (2, 8),
                                    (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (4, 4)])
    assert c_t == c_i.swap()


def criterion_3():
    for n in range(1, 5):
        for m in range(1, 11):
            p = genfun(n, m)
            assert p == p.swap()
            s = mc.build_system(n, m)
            assert s.genfun() == p
            assert cf.endpoint_identity_holds(s)
            assert cf.verify_symmetry_via_chains(s)


def criterion_4():
    for m in range(1, 6):
        assert gh.ac_genfun(1, m) == Poly.constant(1)
        assert gh.ac_genfun(2, m) == Poly({(i, m - i): 1 for i in range(m + 1)})
        for n in range(1, 5):
            assert gh.ac_genfun(n, m) == genfun(n, m)
    # beyond n = 4 the equality is reported, not required
    for n in (5, 6):
        for m in (1, 2):
            same = gh.ac_genfun(n, m) == genfun(n, m)
            print(f"  AC_{n}^({m}) = C_{n}^({m}): {'yes' if same else 'no'} (non-fatal)")


def criterion_5():
    for m in range(1, 11):
        p = genfun(4, m)
        for j in range(p.degree() + 2):
            for k in range(p.degree() + 2):
                assert mc.closed_coeff_c4(m, j, k) == p.coeff(j, k)
        assert _unimodal_everywhere(p)


def criterion_6():
    for m in range(1, 11):
        # ChainSystem checks injectivity, the image and the (-1, +1) shift when built
        s = mc.build_system(5, m)
        assert len(s) == fuss_catalan(5, m)
        c_i, c_t, _ = cf.endpoint_genfuns(s)
        assert c_t == c_i.swap()
        assert cf.verify_symmetry_via_chains(s)


def criterion_7():
    s, h = worked_system_small()
    assert cf.build_involution_J(s, h) == _pairs(WORKED_SMALL_J)
    s, h = worked_system_four_chains()
    assert cf.build_involution_J(s, h) == _pairs(WORKED_FOUR_J)
    assert set(cf.reattached_chains(s, h)) == WORKED_FOUR_REATTACHED
    for n in range(1, 5):
        for m in range(1, 6):
            s = mc.build_system(n, m)
            J = cf.build_involution_J(s, cf.canonical_h(s))
            assert cf.is_stat_swapping_involution(s, J)
    rng = random.Random(20240607)
    for _ in range(1000):
        s, h = random_chain_system(rng)
        assert cf.is_stat_swapping_involution(s, cf.build_involution_J(s, h))


def criterion_8():
    for m in range(1, 6):
        for p in rs.enumerate_paths(4 * m + 2, 4):
            assert rs.h_stats(p.x, m, 1)[0] == rs.h_stats(p.x, 4 * m + 2, 4)[1]
        for p in rs.enumerate_paths(4 * m - 1, 4):
            assert rs.h_stats(p.x, m, 1)[1] == rs.h_stats(p.x, 4 * m - 1, 4)[0]
    for case in rs.CASES:
        for m in range(1, 11):
            s = rs.build_rs_system(case, m)
            p = rs.rs_genfun(*rs.case_dims(case, m))
            assert p.is_symmetric() and s.genfun() == p
            assert cf.verify_symmetry_via_chains(s)
            rs.rs_endpoint_sets(case, m)
    s = rs.build_rs_system("slope_4m1", 2)
    assert len(s) == 30
    assert sorted(cf.decompose_chains(s).lengths(), reverse=True) == [9, 6, 4, 4, 0, 0, 0]
    c_i, c_t, _ = cf.endpoint_genfuns(s)
    assert c_i == Poly.from_counts([(9, 0), (7, 1), (5, 2), (6, 1), (4, 2), (2, 4), (3, 3)])
    assert c_t == Poly.from_counts([(0, 9), (1, 7), (1, 6), (2, 5), (4, 2), (2, 4), (3, 3)])
    for m in range(1, 11):
        for case, dims in (("c2m122", (4 * m + 2, 4)), ("c4m141", (4 * m - 1, 4))):
            p = rs.rs_genfun(*dims)
            for j in range(p.degree() + 2):
                for k in range(p.degree() + 2):
                    assert rs.closed_coeff_rs(case, m, j, k) == p.coeff(j, k)
            assert _unimodal_everywhere(p)


def criterion_9():
    for r in range(4, 41):
        if r % 3 == 0:
            continue
        checks = rs.gm_check(rs.gm_construct(r))
        assert all(checks.values()), (r, checks)


def criterion_10():
    for m in range(1, 6):
        assert gh.sigma_form("C3", m) == genfun(3, m)
        assert gh.sigma_form("AC4", m) == genfun(4, m)
        assert gh.sigma_form("C_2m1_2_2", m) == rs.rs_genfun(4 * m + 2, 4)
        assert gh.sigma_form("C_4m1_4_1", m) == rs.rs_genfun(4 * m - 1, 4)


CRITERIA = [
    (1, "C_3 and C_2^(m) exact", criterion_1, 1.0),
    (2, "n=4, m=2 chain example", criterion_2, 1.0),
    (3, "joint symmetry n<=4, m<=10, direct and by chains", criterion_3, 10.0),
    (4, "Garsia-Haiman formula equals combinatorial sum", criterion_4, 60.0),
    (5, "closed coefficients of C_4^(m) and unimodality", criterion_5, 10.0),
    (6, "n=5 chain map, m<=10", criterion_6, 120.0),
    (7, "involution J on worked and random systems", criterion_7, 30.0),
    (8, "rational-slope cases", criterion_8, 60.0),
    (9, "Gorsky-Mazin bijection, r<=40", criterion_9, 10.0),
    (10, "sigma-form identities", criterion_10, 30.0),
]


def run_criterion(number, fn, budget):
    start = time.perf_counter()
    error = None
    try:
        fn()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < budget
    RESULTS[number] = (ok, elapsed, budget)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s, budget {budget:.0f}s)")
    return ok, elapsed, error


@pytest.mark.parametrize("number,name,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, name, fn, budget):
    ok, elapsed, error = run_criterion(number, fn, budget)
    if error is not None:
        raise error
    assert elapsed < budget, f"{name} took {elapsed:.2f}s, budget {budget}s"


if __name__ == "__main__":
    failed = [n for n, _, fn, b in CRITERIA if not run_criterion(n, fn, b)[0]]
    raise SystemExit(1 if failed else 0)
