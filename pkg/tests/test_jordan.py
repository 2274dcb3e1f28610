"""Jordan layer: determinants, signature strata, frames, cone stabilizers."""

import random
from fractions import Fraction as Q
from math import comb

import pytest

from crownorbits.jordan import (
    build_jordan,
    element_inertia,
    frame_point,
    jordan_det,
    signature_stratum,
    stratum_stabilizer_algebra,
    stratum_transitivity_check,
    xi0_extreme_orbits,
)
from crownorbits.crown import brute_force_vertices
from crownorbits.liealg import build_classical, fingerprint_of_algebra
from crownorbits.linalg import GaussianRational as GI
from crownorbits.linalg import mat_inverse

ALGEBRAS = ["Symm(2,R)", "Symm(3,R)", "Symm(4,R)", "Symm(5,R)",
            "Herm(2,C)", "Herm(3,C)", "Herm(4,C)"]


def rand_element(V, rng, lo=-5, hi=5):
    n = V.n
    if V.family == "Symm":
        r = [[Q(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        return [[r[i][j] + r[j][i] for j in range(n)] for i in range(n)]
    g = [[GI(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(n)]
         for _ in range(n)]
    return [[g[i][j] + GI(g[j][i].re, -g[j][i].im) for j in range(n)]
            for i in range(n)]


def test_build_and_name():
    V = build_jordan("Symm(3, R)")
    assert (V.family, V.n, V.name) == ("Symm", 3, "Symm(3,R)")
    assert build_jordan("Herm(4,C)").name == "Herm(4,C)"


@pytest.mark.parametrize("bad", [
    "Symm(0,R)", "Herm(2,R)", "Symm(3,C)", "Herm(3,H)", "Herm(3,O)", "sl(2,R)",
])
def test_build_rejects(bad):
    with pytest.raises(ValueError):
        build_jordan(bad)


def test_rank_one_has_strata_but_no_sign_vectors():
    V = build_jordan("Symm(1,R)")
    assert signature_stratum(V, [[Q(5)]]).p == 1
    fp, found = stratum_stabilizer_algebra(V, 0)
    assert fp.dim == 0 and found == "so(1)"
    with pytest.raises(ValueError, match="rank >= 2"):
        xi0_extreme_orbits(V)


def test_element_validation():
    V = build_jordan("Symm(2,R)")
    with pytest.raises(ValueError, match="matrix"):
        jordan_det(V, [[1, 0]])
    with pytest.raises(ValueError):
        jordan_det(V, [[1, 2], [3, 4]])  # not symmetric
    W = build_jordan("Herm(2,C)")
    with pytest.raises(ValueError):
        jordan_det(W, [[GI(0, 1), 0], [0, 0]])  # diagonal must be real


def test_frame_idempotents():
    V = build_jordan("Herm(3,C)")
    cs = V.frame
    e = V.unit
    total = [[sum(c[i][j] for c in cs) for j in range(3)] for i in range(3)]
    assert total == e
    for i, ci in enumerate(cs):
        for j, cj in enumerate(cs):
            prod = V.product(ci, cj)
            want = ci if i == j else [[GI(0)] * 3 for _ in range(3)]
            assert all(prod[a][b] == want[a][b] for a in range(3) for b in range(3))


def test_product_commutes_and_jordan_identity():
    rng = random.Random(7)
    for name in ("Symm(3,R)", "Herm(3,C)"):
        V = build_jordan(name)
        for _ in range(5):
            x = rand_element(V, rng, -3, 3)
            y = rand_element(V, rng, -3, 3)
            assert V.product(x, y) == V.product(y, x)
            x2 = V.product(x, x)
            lhs = V.product(V.product(x2, y), x)
            rhs = V.product(x2, V.product(y, x))
            assert lhs == rhs


def test_det_of_unit_and_frames():
    for name in ALGEBRAS:
        V = build_jordan(name)
        assert jordan_det(V, V.unit) == 1
        for p in range(V.n + 1):
            z = frame_point(V, p)
            assert jordan_det(V, z) == (-1) ** (V.n - p)
            lab = signature_stratum(V, z)
            assert lab.p == p and lab.regular


def test_det_singular():
    V = build_jordan("Symm(3,R)")
    x = [[1, 1, 0], [1, 1, 0], [0, 0, 2]]
    assert jordan_det(V, x) == 0
    lab = signature_stratum(V, x)
    assert not lab.regular and lab.p == 2


def test_frame_point_edges():
    V = build_jordan("Symm(2,R)")
    assert frame_point(V, 2) == V.unit
    assert frame_point(V, 0) == [[-1, 0], [0, -1]]
    assert frame_point(V, 1) == [[1, 0], [0, -1]]
    with pytest.raises(ValueError, match="out of range"):
        frame_point(V, 3)
    with pytest.raises(ValueError, match="out of range"):
        frame_point(V, -1)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_sturm_agrees_with_inertia(name):
    # the two independent exact root counters must never disagree
    rng = random.Random(hash(name) & 0xFFFF)
    V = build_jordan(name)
    for _ in range(100):
        x = rand_element(V, rng)
        lab = signature_stratum(V, x)
        pos, zero, neg = element_inertia(V, x)
        assert lab.p == pos
        assert lab.regular == (zero == 0)


def test_stratum_is_congruence_invariant():
    rng = random.Random(13)
    V = build_jordan("Symm(3,R)")
    for _ in range(10):
        x = rand_element(V, rng)
        g = [[Q(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        try:
            mat_inverse(g)
        except ValueError:
            continue
        gx = [[sum(g[i][a] * x[a][b] * g[j][b] for a in range(3) for b in range(3))
               for j in range(3)] for i in range(3)]
        assert signature_stratum(V, gx).p == signature_stratum(V, x).p


def test_stratum_is_rotation_invariant():
    # Cayley transform of a rational antisymmetric matrix is orthogonal
    rng = random.Random(29)
    V = build_jordan("Symm(3,R)")
    s = [[Q(0), Q(1, 2), Q(-1, 3)], [Q(-1, 2), Q(0), Q(1)], [Q(1, 3), Q(-1), Q(0)]]
    eye = [[Q(int(i == j)) for j in range(3)] for i in range(3)]
    plus = [[eye[i][j] + s[i][j] for j in range(3)] for i in range(3)]
    minus = [[eye[i][j] - s[i][j] for j in range(3)] for i in range(3)]
    inv = mat_inverse(plus)
    k = [[sum(minus[i][a] * inv[a][j] for a in range(3)) for j in range(3)]
         for i in range(3)]
    ktk = [[sum(k[a][i] * k[a][j] for a in range(3)) for j in range(3)]
           for i in range(3)]
    assert ktk == eye
    for _ in range(5):
        x = rand_element(V, rng)
        kx = [[sum(k[i][a] * x[a][b] * k[j][b] for a in range(3) for b in range(3))
               for j in range(3)] for i in range(3)]
        assert signature_stratum(V, kx) == signature_stratum(V, x)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_xi0_orbit_combinatorics(n):
    V = build_jordan(f"Symm({n},R)")
    dec = xi0_extreme_orbits(V)
    assert len(dec.orbits) == n + 1
    assert [o.size for o in dec.orbits] == [comb(n, p) for p in range(n, -1, -1)]
    assert sum(o.size for o in dec.orbits) == 2**n
    # representative of the p-th orbit matches the frame point diagonal
    for o, p in zip(dec.orbits, range(n, -1, -1)):
        diag = tuple(Q(1) if i < p else Q(-1) for i in range(n))
        assert o.representative == diag


def test_xi0_extreme_set_is_the_cube():
    V = build_jordan("Symm(3,R)")
    dec = xi0_extreme_orbits(V)
    pts = {x for o in dec.orbits for x in o.elements}
    assert pts == brute_force_vertices(dec.polytope)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_stabilizer_identification(name):
    V = build_jordan(name)
    n = V.n
    kind = "so" if V.family == "Symm" else "su"
    want_dim = n * (n - 1) // 2 if kind == "so" else n * n - 1
    for p in range(n + 1):
        fp, found = stratum_stabilizer_algebra(V, p)
        assert fp.dim == want_dim
        if p in (0, n):
            assert found == f"{kind}({n})"
            pos, zero, neg = fp.killing_signature
            assert pos == 0  # compact stabilizer at the definite strata
        else:
            assert found == f"{kind}({p},{n - p})"


def test_stabilizer_matches_liealg_builders():
    V = build_jordan("Symm(4,R)")
    fp, _ = stratum_stabilizer_algebra(V, 1)
    assert fp == fingerprint_of_algebra(build_classical("so(1,3)"))
    W = build_jordan("Herm(4,C)")
    fp2, _ = stratum_stabilizer_algebra(W, 2)
    assert fp2 == fingerprint_of_algebra(build_classical("su(2,2)"))


def test_transitivity_check():
    V = build_jordan("Symm(2,R)")
    assert stratum_transitivity_check(V, 1, [[[2, 0], [0, -3]]])
    assert not stratum_transitivity_check(V, 2, [[[2, 0], [0, -3]]])
    # singular sample is not in any regular stratum
    assert not stratum_transitivity_check(V, 1, [[[1, 0], [0, 0]]])
    rng = random.Random(47)
    W = build_jordan("Symm(3,R)")
    cone = []
    while len(cone) < 5:
        g = [[Q(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        try:
            mat_inverse(g)
        except ValueError:
            continue
        cone.append([[sum(g[a][i] * g[a][j] for a in range(3)) for j in range(3)]
                     for i in range(3)])
    # g g^T samples fill the open cone, the top regular stratum
    assert stratum_transitivity_check(W, 3, cone)
