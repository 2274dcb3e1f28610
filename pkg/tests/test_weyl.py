"""Orbit machinery: reflections, dominant representatives, BFS orbits."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from crownorbits.rootsys import build_root_system, dual_basis
from crownorbits.weyl import (
    apply_word,
    dominant_representative,
    orbit,
    reflect,
    same_orbit,
)


def vecq(*coords):
    return tuple(Q(c) for c in coords)


def _pair(i, j, si, sj, dim=8):
    v = [Q(0)] * dim
    v[i] = Q(si)
    v[j] = Q(sj)
    return tuple(v)


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_reflect_is_an_involution(coords):
    b3 = build_root_system("B", 3)
    v = vecq(*coords)
    for alpha in b3.roots:
        assert reflect(reflect(v, alpha), alpha) == v


def test_reflect_negates_the_root():
    c3 = build_root_system("C", 3)
    for alpha in c3.roots:
        assert reflect(alpha, alpha) == tuple(-x for x in alpha)


def test_reflect_rejects_zero():
    with pytest.raises(ValueError):
        reflect(vecq(1, 0), vecq(0, 0))


def test_dominant_representative_is_idempotent():
    d4 = build_root_system("D", 4)
    v = vecq(-3, 1, -2, 5)
    dom = dominant_representative(d4, v)
    assert dominant_representative(d4, dom) == dom
    # dominance: nonnegative pairing with every simple root
    from crownorbits.linalg import dot

    assert all(dot(dom, a) >= 0 for a in d4.simple)


def test_dominant_representative_constant_on_orbit():
    b2 = build_root_system("B", 2)
    v = vecq(2, -1)
    dom = dominant_representative(b2, v)
    for w in orbit(b2, v).elements:
        assert dominant_representative(b2, w) == dom


@pytest.mark.parametrize(
    "family,rank,coords,size",
    [
        ("A", 2, (3, 1, 0), 6),
        ("A", 3, (5, 3, 1, 0), 24),
        ("B", 2, (2, 1), 8),
        ("B", 3, (3, 2, 1), 48),
        ("C", 3, (3, 2, 1), 48),
        ("D", 3, (3, 2, 1), 24),
        ("D", 4, (4, 3, 2, 1), 192),
        ("BC", 2, (2, 1), 8),
    ],
)
def test_regular_orbit_has_full_weyl_order(family, rank, coords, size):
    rd = build_root_system(family, rank)
    orb = orbit(rd, vecq(*coords))
    assert orb.size == size == rd.weyl_order


def test_orbit_fields_are_consistent():
    b2 = build_root_system("B", 2)
    orb = orbit(b2, vecq(-1, 2))
    assert orb.size == len(orb.elements)
    assert orb.elements == tuple(sorted(orb.elements))
    assert orb.representative == dominant_representative(b2, vecq(-1, 2))
    assert orb.representative in orb.elements


@pytest.mark.parametrize(
    "family,rank,index,size",
    [
        ("E6", 6, 0, 27),
        ("E6", 6, 5, 27),
        ("E7", 7, 6, 56),
    ],
)
def test_minuscule_weight_orbit_sizes(family, rank, index, size):
    rd = build_root_system(family, rank)
    assert orbit(rd, dual_basis(rd)[index]).size == size


def test_e7_second_cube_point_orbit_size():
    # omega_2 / 2 sits on the unit cube of the big chamber; its orbit is
    # much larger than the 56-point minuscule one.
    e7 = build_root_system("E7", 7)
    y = tuple(x / 2 for x in dual_basis(e7)[1])
    assert orbit(e7, y).size == 576


def test_same_orbit_distinguishes_e6_cominuscule_pair():
    e6 = build_root_system("E6", 6)
    w1, w6 = dual_basis(e6)[0], dual_basis(e6)[5]
    assert not same_orbit(e6, w1, w6)
    assert same_orbit(e6, w1, reflect(w1, e6.roots[0]))


def test_apply_word_matches_simple_reflections():
    d4 = build_root_system("D", 4)
    v = vecq(1, 2, 3, 4)
    assert apply_word(d4, [2], v) == reflect(v, d4.simple[2])
    assert apply_word(d4, [0, 1], v) == reflect(reflect(v, d4.simple[1]), d4.simple[0])
    assert apply_word(d4, [], v) == v


def _convex(c1, v1, c2, v2):
    return tuple(c1 * a + c2 * b for a, b in zip(v1, v2))


def test_e7_cube_points_are_convex_combinations_of_orbit_points():
    # every omega_j/m_j with j != 2 lies in the hull of the 56-point orbit;
    # each identity below is exact in Q^8.
    e7 = build_root_system("E7", 7)
    om = dual_basis(e7)
    m = (2, 2, 3, 4, 3, 2, 1)
    cand = [tuple(x / m[j] for x in om[j]) for j in range(7)]
    o7 = om[6]

    w = reflect(reflect(o7, _pair(4, 5, 1, 1)), _pair(4, 5, 1, -1))
    assert cand[0] == _convex(Q(1, 2), o7, Q(1, 2), w)

    w = reflect(o7, _pair(4, 5, 1, -1))
    assert cand[5] == _convex(Q(1, 2), o7, Q(1, 2), w)

    w = reflect(o7, _pair(0, 5, 1, 1))
    assert cand[2] == _convex(Q(2, 3), cand[1], Q(1, 3), w)

    w = reflect(o7, _pair(3, 5, 1, -1))
    assert cand[4] == _convex(Q(1, 3), w, Q(2, 3), cand[5])

    w = reflect(o7, _pair(2, 5, 1, -1))
    assert cand[3] == _convex(Q(3, 4), cand[4], Q(1, 4), w)


def test_e6_cube_points_are_convex_combinations_of_orbit_points():
    e6 = build_root_system("E6", 6)
    om = dual_basis(e6)
    m = (1, 2, 2, 3, 2, 1)
    cand = [tuple(x / m[j] for x in om[j]) for j in range(6)]
    o6 = om[5]

    w = reflect(o6, _pair(3, 4, 1, -1))
    assert cand[4] == _convex(Q(1, 2), o6, Q(1, 2), w)

    w = reflect(o6, _pair(2, 4, 1, -1))
    assert cand[3] == _convex(Q(2, 3), cand[4], Q(1, 3), w)
