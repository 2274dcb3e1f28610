"""Unit cube of the root pairing: membership, extreme points, vertex orbits."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from crownorbits.crown import (
    CrownPolytope,
    active_roots,
    brute_force_vertices,
    extreme_candidates,
    extreme_orbits,
    is_extreme_point,
    membership,
    xi0_polytope,
)
from crownorbits.linalg import dot, rank
from crownorbits.rootsys import build_root_system, dual_basis
from crownorbits.weyl import orbit, reflect

H = Q(1, 2)


def vecq(*coords):
    return tuple(Q(c) for c in coords)


def poly(family, rank_):
    return CrownPolytope(build_root_system(family, rank_))


def test_membership_three_regimes():
    p = poly("B", 3)
    assert membership(p, vecq(0, 0, 0)) == "interior"
    assert membership(p, (Q(1, 3), Q(1, 5), 0)) == "interior"
    assert membership(p, vecq(1, 0, 0)) == "boundary"
    assert membership(p, vecq(2, 0, 0)) == "exterior"
    c = poly("C", 3)
    assert membership(c, vecq(1, 1, 1)) == "boundary"
    assert membership(c, (Q(11, 10), 0, 0)) == "exterior"


def test_candidate_points_lie_on_the_boundary():
    for family, r in [("A", 3), ("B", 4), ("C", 3), ("D", 4), ("BC", 3), ("E6", 6), ("E7", 7)]:
        p = poly(family, r)
        for y in extreme_candidates(p):
            assert membership(p, y) == "boundary"


def test_candidate_values_small_rank():
    assert extreme_candidates(poly("C", 3)) == [
        vecq(1, 0, 0),
        vecq(1, 1, 0),
        vecq(1, 1, 1),
    ]
    assert extreme_candidates(poly("B", 3)) == [
        vecq(1, 0, 0),
        (H, H, 0),
        (H, H, H),
    ]


def test_candidates_divide_by_highest_root_coefficients():
    e7 = poly("E7", 7)
    om = dual_basis(e7.datum)
    m = (2, 2, 3, 4, 3, 2, 1)
    assert extreme_candidates(e7) == [
        tuple(x / m[j] for x in om[j]) for j in range(7)
    ]


def test_candidates_reject_reducible_system():
    with pytest.raises(ValueError):
        extreme_candidates(poly("D", 2))


def test_active_roots_empty_at_origin():
    p = poly("D", 4)
    assert active_roots(p, vecq(0, 0, 0, 0)) == ()


def test_is_extreme_point_basic():
    p = poly("B", 3)
    assert is_extreme_point(p, vecq(1, 0, 0))
    assert is_extreme_point(p, (H, H, H))
    assert not is_extreme_point(p, (H, H, 0))
    assert not is_extreme_point(p, vecq(0, 0, 0))
    with pytest.raises(ValueError):
        is_extreme_point(p, vecq(3, 0, 0))


def test_e6_candidate_extremality():
    p = poly("E6", 6)
    cand = extreme_candidates(p)
    flags = [is_extreme_point(p, y) for y in cand]
    assert flags == [True, False, False, False, False, True]


def test_e7_candidate_extremality():
    # the interior lattice points of the scaled fundamental box drop out
    # except for the one above the second node; see the two certificate
    # tests below for why that survivor is genuine.
    p = poly("E7", 7)
    cand = extreme_candidates(p)
    flags = [is_extreme_point(p, y) for y in cand]
    assert flags == [False, True, False, False, False, False, True]


def test_e7_second_vertex_active_root_certificate():
    # at omega_2/2 exactly fourteen roots pair to +-1: the highest root
    # and the six positive half-roots with a single sign flip, plus
    # negatives.  They span the full seven dimensional root span.
    e7 = build_root_system("E7", 7)
    p = CrownPolytope(e7)
    y = tuple(x / 2 for x in dual_basis(e7)[1])
    beta = vecq(0, 0, 0, 0, 0, 0, -1, 1)
    gammas = []
    for k in range(6):
        c = [H] * 6
        c[k] = -H
        gammas.append(tuple(c) + (-H, H))
    expected = set(gammas + [beta])
    expected |= {tuple(-x for x in v) for v in expected}
    act = active_roots(p, y)
    assert set(act) == expected
    assert len(act) == 14
    assert rank([list(v) for v in act]) == 7


def test_e7_second_vertex_separates_from_minuscule_hull():
    # a supporting functional achieves 7 at omega_2/2 but at most 6 on
    # the 56 point orbit, so omega_2/2 cannot lie in that orbit's hull
    # even though it sits inside the closed polytope.
    e7 = build_root_system("E7", 7)
    p = CrownPolytope(e7)
    y = tuple(x / 2 for x in dual_basis(e7)[1])
    phi = vecq(2, 2, 2, 2, 2, 2, -4, 4)
    assert dot(phi, y) == 7
    assert max(dot(phi, w) for w in orbit(e7, dual_basis(e7)[6]).elements) == 6
    assert membership(p, y) == "boundary"


EXPECTED_ORBITS = {
    # A-family duals live in the sum-zero hyperplane
    ("A", 2): [
        ((Q(2, 3), Q(-1, 3), Q(-1, 3)), 3),
        ((Q(1, 3), Q(1, 3), Q(-2, 3)), 3),
    ],
    ("A", 3): [
        ((Q(3, 4), Q(-1, 4), Q(-1, 4), Q(-1, 4)), 4),
        ((H, H, -H, -H), 6),
        ((Q(1, 4), Q(1, 4), Q(1, 4), Q(-3, 4)), 4),
    ],
    ("A", 4): [
        ((Q(4, 5), Q(-1, 5), Q(-1, 5), Q(-1, 5), Q(-1, 5)), 5),
        ((Q(3, 5), Q(3, 5), Q(-2, 5), Q(-2, 5), Q(-2, 5)), 10),
        ((Q(2, 5), Q(2, 5), Q(2, 5), Q(-3, 5), Q(-3, 5)), 10),
        ((Q(1, 5), Q(1, 5), Q(1, 5), Q(1, 5), Q(-4, 5)), 5),
    ],
    ("B", 2): [(vecq(1, 0), 4)],
    ("B", 3): [(vecq(1, 0, 0), 6), ((H, H, H), 8)],
    ("B", 4): [(vecq(1, 0, 0, 0), 8), ((H, H, H, H), 16)],
    ("C", 2): [(vecq(1, 1), 4)],
    ("C", 3): [(vecq(1, 1, 1), 8)],
    ("C", 4): [(vecq(1, 1, 1, 1), 16)],
    ("D", 3): [(vecq(1, 0, 0), 6), ((H, H, H), 4), ((H, H, -H), 4)],
    ("D", 4): [(vecq(1, 0, 0, 0), 8), ((H, H, H, H), 8), ((H, H, H, -H), 8)],
    ("D", 5): [(vecq(1, 0, 0, 0, 0), 10), ((H, H, H, H, H), 16), ((H, H, H, H, -H), 16)],
    ("BC", 2): [((H, H), 4)],
    ("BC", 3): [((H, H, H), 8)],
}


@pytest.mark.parametrize("key", sorted(EXPECTED_ORBITS))
def test_extreme_orbit_tables_classical(key):
    family, r = key
    dec = extreme_orbits(poly(family, r))
    got = [(o.representative, o.size) for o in dec.orbits]
    assert got == EXPECTED_ORBITS[key]


def test_extreme_orbit_table_e6():
    e6 = build_root_system("E6", 6)
    dec = extreme_orbits(CrownPolytope(e6))
    got = [(o.representative, o.size) for o in dec.orbits]
    assert got == [(dual_basis(e6)[5], 27), (dual_basis(e6)[0], 27)]


def test_extreme_orbit_table_e7():
    e7 = build_root_system("E7", 7)
    dec = extreme_orbits(CrownPolytope(e7))
    got = [(o.representative, o.size) for o in dec.orbits]
    half = tuple(x / 2 for x in dual_basis(e7)[1])
    assert got == [(half, 576), (dual_basis(e7)[6], 56)]


@pytest.mark.parametrize("family,r", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("D", 3), ("BC", 2)])
def test_brute_force_agrees_with_orbit_construction(family, r):
    p = poly(family, r)
    from_orbits = set()
    for o in extreme_orbits(p).orbits:
        from_orbits.update(o.elements)
    assert brute_force_vertices(p) == from_orbits


def test_b2_vertices_explicitly():
    verts = brute_force_vertices(poly("B", 2))
    assert verts == {vecq(1, 0), vecq(-1, 0), vecq(0, 1), vecq(0, -1)}


def test_brute_force_guard_on_large_rank():
    with pytest.raises(ValueError):
        brute_force_vertices(poly("B", 5))


@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3))
def test_membership_is_weyl_invariant(coords):
    p = poly("B", 3)
    v = tuple(Q(c, 2) for c in coords)
    status = membership(p, v)
    for alpha in p.datum.simple:
        assert membership(p, reflect(v, alpha)) == status


def test_xi0_polytope_family_selection():
    odd = xi0_polytope("so(3, 5)").datum
    assert odd.family == "BC" and odd.rank == 3
    assert xi0_polytope("so(2,7)").datum.family == "BC"
    even = xi0_polytope("so(4,4)").datum
    assert even.family == "C" and even.rank == 4
    assert vecq(2, 0, 0, 0) in even.roots
    assert vecq(1, -1, 0, 0) in even.roots
    assert xi0_polytope("so(7,C)").datum.family == "BC"
    assert xi0_polytope("so(8,C)").datum.rank == 4


def test_xi0_polytope_swaps_signature_order():
    assert xi0_polytope("so(5,3)").datum.rank == 3


def test_xi0_extreme_orbit_is_the_half_cube():
    dec = extreme_orbits(xi0_polytope("so(3,3)"))
    assert [(o.representative, o.size) for o in dec.orbits] == [((H, H, H), 8)]
    dec2 = extreme_orbits(xi0_polytope("so(3,5)"))
    assert [(o.representative, o.size) for o in dec2.orbits] == [((H, H, H), 8)]


def test_xi0_polytope_rejects_unsupported_names():
    for bad in ["so(1,5)", "so(3,C)", "sl(4,R)", "sp(3,R)"]:
        with pytest.raises(ValueError):
            xi0_polytope(bad)
