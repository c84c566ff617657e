import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtcatalan import chainfw as cf
from qtcatalan.errors import InvalidChainMap, MidlineViolation, NoSuchBijection
from qtcatalan.qtpoly import Poly
from qtcatalan.verify import (
    WORKED_FOUR_J, WORKED_FOUR_REATTACHED, WORKED_SMALL_J, random_chain_system,
    worked_system_four_chains, worked_system_small,
)


def both_ways(pairs):
    out = {}
    for u, v in pairs.items():
        out[u] = v
        out[v] = u
    return out


def line_system(length):
    """One chain from (length, 0) to (0, length)."""
    ids = list(range(length + 1))
    return cf.ChainSystem(ids, {i: length - i for i in ids}, {i: i for i in ids},
                          {i: i + 1 for i in ids[:-1]}, [length])


def test_line_system():
    s = line_system(4)
    dec = cf.decompose_chains(s)
    assert dec.chains == [(0, 1, 2, 3, 4)]
    assert dec.lengths() == [4]
    assert cf.verify_symmetry_via_chains(s)
    assert cf.endpoint_identity_holds(s)
    assert cf.canonical_h(s) == {4: 0}
    J = cf.build_involution_J(s, {4: 0})
    assert J == {0: 4, 1: 3, 2: 2, 3: 1, 4: 0}


def test_wrong_shift_rejected():
    with pytest.raises(InvalidChainMap):
        cf.ChainSystem([0, 1], {0: 2, 1: 0}, {0: 0, 1: 1}, {0: 1}, [1])


def test_non_injective_rejected():
    a = {0: 2, 1: 2, 2: 1}
    d = {0: 0, 1: 0, 2: 1}
    with pytest.raises(InvalidChainMap):
        cf.ChainSystem([0, 1, 2], a, d, {0: 2, 1: 2}, [2])


def test_domain_must_be_complement_of_terminal():
    with pytest.raises(InvalidChainMap):
        cf.ChainSystem([0, 1], {0: 1, 1: 0}, {0: 0, 1: 1}, {}, [1])
    with pytest.raises(InvalidChainMap):
        cf.ChainSystem([0, 1], {0: 1, 1: 0}, {0: 0, 1: 1}, {0: 1}, [1], initial=[1])


def test_asymmetric_system_detected():
    # a single chain from (2, 0) to (1, 1): C_T = q t but C_I(t, q) = t^2
    s = cf.ChainSystem([0, 1], {0: 2, 1: 1}, {0: 0, 1: 1}, {0: 1}, [1])
    assert not cf.verify_symmetry_via_chains(s)
    with pytest.raises(NoSuchBijection):
        cf.canonical_h(s)


def test_endpoint_coefficients():
    s, _ = worked_system_four_chains()
    c_w = s.genfun()
    for j in range(8):
        for k in range(8):
            assert cf.coeff_from_endpoints(s, j, k) == c_w.coeff(j, k)


def test_worked_small_pairing():
    s, h = worked_system_small()
    J = cf.build_involution_J(s, h)
    assert J == both_ways(WORKED_SMALL_J)
    assert J[1] == 9 and J[2] == 11 and J[6] == 6
    assert cf.is_stat_swapping_involution(s, J)


def test_worked_four_chain_pairing_and_start_independence():
    s, h = worked_system_four_chains()
    J = both_ways(WORKED_FOUR_J)
    assert cf.build_involution_J(s, h) == J
    # both admissible starting points of the single cycle give the same J
    assert cf.build_involution_J(s, h, start=10) == J
    assert set(cf.reattached_chains(s, h)) == WORKED_FOUR_REATTACHED
    R = cf.reattach_chains(s, h)
    assert cf.is_stat_swapping_involution(s, R)


def test_drawing_shape():
    s, h = worked_system_four_chains()
    (drawing,) = cf.cycle_drawings(s, h)
    assert [p.element for p in drawing.dots][:4] == [1, 2, 3, 4]
    assert [p.y for p in drawing.dots][:5] == [5, 3, 1, 1, 1]
    assert all(p.y >= 0 for p in drawing.dots)
    assert drawing.to_json()[0] == {"id": "1", "x": 0, "y": 5, "color": "black"}


def test_midline_violation():
    s, h = worked_system_small()
    # heads 10 and 14 lie below the midline, so reattachment is undefined
    with pytest.raises(MidlineViolation):
        cf.reattached_chains(s, h)
    bad = cf.ChainSystem([0, 1], {0: 0, 1: 1}, {0: 1, 1: 0}, {}, [0, 1])
    with pytest.raises(MidlineViolation):
        cf.reattached_chains(bad, {0: 1, 1: 0})


def test_bad_h_rejected():
    s, h = worked_system_small()
    broken = dict(h)
    broken[3], broken[9] = broken[9], broken[3]
    with pytest.raises(NoSuchBijection):
        cf.build_involution_J(s, broken)


def test_dot_export():
    s = line_system(2)
    text = cf.to_dot(s, {2: 0})
    assert text.startswith("digraph chains {")
    assert '"0" -> "1";' in text and '"2" -> "0" [style=dashed];' in text


def test_excess_multiset():
    s, _ = worked_system_four_chains()
    assert cf.excess_multiset_symmetric(s)
    lopsided = cf.ChainSystem([0], {0: 1}, {0: 0}, {}, [0])
    assert not cf.excess_multiset_symmetric(lopsided)


def test_from_function():
    s = cf.ChainSystem.from_function(range(3), lambda w: (2 - w, w), lambda w: w + 1, [2])
    assert s.genfun() == Poly({(2, 0): 1, (1, 1): 1, (0, 2): 1})


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_random_systems(seed):
    s, h = random_chain_system(random.Random(seed))
    assert cf.verify_symmetry_via_chains(s)
    assert cf.excess_multiset_symmetric(s)
    J = cf.build_involution_J(s, h)
    assert cf.is_stat_swapping_involution(s, J)
    if all(s.a[w] >= s.d[w] for w in s.I):
        assert cf.is_stat_swapping_involution(s, cf.reattach_chains(s, h))


def test_thousand_seeded_systems():
    rng = random.Random(7)
    for _ in range(1000):
        s, h = random_chain_system(rng)
        assert cf.is_stat_swapping_involution(s, cf.build_involution_J(s, h))
