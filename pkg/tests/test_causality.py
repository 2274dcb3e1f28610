"""Adjoint spectra of boundary points and the causal reference table."""

from fractions import Fraction as Q

import pytest

from crownorbits.causality import (
    REFERENCE_TABLE,
    SpectrumReport,
    ad_spectrum,
    component_flags,
    lookup_causal_pairs,
)
from crownorbits.crown import CrownPolytope, extreme_orbits
from crownorbits.rootsys import build_root_system, dual_basis

H = Q(1, 2)


def vecq(*coords):
    return tuple(Q(c) for c in coords)


def test_spectrum_at_origin():
    rd = build_root_system("B", 3)
    rep = ad_spectrum(rd, vecq(0, 0, 0))
    assert rep.values == (0,)
    assert rep.is_half_integral
    assert rep.is_involutive


def test_spectrum_of_cayley_point_is_involutive():
    c3 = build_root_system("C", 3)
    rep = ad_spectrum(c3, vecq(1, 1, 1))
    assert rep.values == (-1, 0, 1)
    assert rep.is_involutive


def test_spectrum_of_half_cube_point_is_half_integral_only():
    b3 = build_root_system("B", 3)
    rep = ad_spectrum(b3, (H, H, H))
    assert rep.values == (-1, -H, 0, H, 1)
    assert rep.is_half_integral
    assert not rep.is_involutive


def test_spectrum_of_minuscule_weight():
    e6 = build_root_system("E6", 6)
    rep = ad_spectrum(e6, dual_basis(e6)[0])
    assert rep.values == (-1, 0, 1)
    assert rep.is_involutive


def test_spectrum_of_e7_second_vertex_is_half_integral_but_not_involutive():
    # 64 spin roots pair against omega_2/2 in quarter-integer steps that
    # nevertheless land on the half lattice: (5 - k)/4 with k odd.
    e7 = build_root_system("E7", 7)
    y = tuple(x / 2 for x in dual_basis(e7)[1])
    rep = ad_spectrum(e7, y)
    assert rep.values == (-1, -H, 0, H, 1)
    assert rep.is_half_integral
    assert not rep.is_involutive


def test_spectrum_values_are_symmetric_and_sorted():
    d4 = build_root_system("D", 4)
    rep = ad_spectrum(d4, (Q(1, 3), Q(1, 5), 0, 0))
    assert rep.values == tuple(sorted(rep.values))
    assert set(rep.values) == {-v for v in rep.values}
    assert 0 in rep.values


def test_spectrum_rejects_vectors_off_the_root_span():
    # e6 sits in an 8-dim ambient space; e_6 violates its span constraints.
    e6 = build_root_system("E6", 6)
    with pytest.raises(ValueError):
        ad_spectrum(e6, vecq(0, 0, 0, 0, 0, 1, 0, 0))


def test_involutivity_is_constant_on_orbits():
    from crownorbits.weyl import orbit

    b3 = build_root_system("B", 3)
    for y0 in [vecq(1, 0, 0), (H, H, H)]:
        flags = {ad_spectrum(b3, w).is_involutive for w in orbit(b3, y0).elements}
        assert len(flags) == 1


FLAG_CASES = {
    ("A", 3): [True, True, True],
    ("B", 3): [True, False],
    ("C", 3): [True],
    ("D", 4): [True, True, True],
    ("BC", 3): [False],
    ("E6", 6): [True, True],
    ("E7", 7): [False, True],
}


@pytest.mark.parametrize("key", sorted(FLAG_CASES))
def test_component_flags(key):
    rd = build_root_system(*key)
    flags = component_flags(rd)
    assert [f["symmetric"] for f in flags] == FLAG_CASES[key]
    assert all(f["totally_real"] == f["symmetric"] for f in flags)
    assert len(flags) == len(extreme_orbits(CrownPolytope(rd)).orbits)


LOOKUP_CASES = [
    ("sl(2,R)", ["R"]),
    ("sl(3,R)", ["so(1,2)", "so(1,2)"]),
    ("sl(4,R)", ["so(1,3)", "so(2,2)", "so(1,3)"]),
    ("sl(3,H)", ["sp(1,2)", "sp(1,2)"]),
    ("sl(2,C)", ["su(1,1)"]),
    ("sp(2,R)", ["gl(2,R)"]),
    ("sp(3,C)", ["sp(3,R)"]),
    ("sp(2,2)", ["sp(2,C)"]),
    ("sp(1,2)", []),
    ("su(3,3)", ["sl(3,C)+R"]),
    ("su(2,3)", []),
    ("so*(8)", ["sl(2,H)+R"]),
    ("so*(6)", []),
    ("so(3,3)", ["so(1,2)+so(1,2)", "so(3,C)"]),
    ("so(2,5)", ["so(1,4)+R"]),
    ("so(1,5)", ["so(1,4)"]),
    ("so(6,C)", ["so(2,4)", "so*(6)"]),
    ("so(3,C)", ["so(1,2)"]),
    ("e6(6)", ["sp(2,2)"]),
    ("e6(-26)", ["f4(-20)"]),
    ("e6C", ["e6(-14)"]),
    ("e7(7)", ["su*(8)"]),
    ("e7(-25)", ["e6(-26)+R"]),
    ("e7C", ["e7(-25)"]),
]


@pytest.mark.parametrize("name,expected", LOOKUP_CASES)
def test_lookup_causal_pairs(name, expected):
    assert lookup_causal_pairs(name) == expected


def test_lookup_rejects_unknown_names():
    with pytest.raises(ValueError):
        lookup_causal_pairs("g2(2)")


def test_reference_table_shape():
    assert len(REFERENCE_TABLE.rows) == 18
    assert len(REFERENCE_TABLE.cayley_rows) == 5


def test_spectrum_report_is_a_value_object():
    a = SpectrumReport(values=(-1, 0, 1), is_half_integral=True, is_involutive=True)
    b = SpectrumReport(values=(-1, 0, 1), is_half_integral=True, is_involutive=True)
    assert a == b
