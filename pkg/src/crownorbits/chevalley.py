"""Structure-constant models of the simply-laced simple Lie algebras.

A bimultiplicative sign cocycle on the root lattice gives exact integer
structure constants for any simply-laced root datum: [e_a, e_b] equals
eps(a, b) e_{a+b} when a + b is a root and -(coroot of a) when b = -a.
From that single table come the split real form, the realification of the
complex algebra with its compact conjugation, and the fingerprints of the
two non-split exceptional reference forms needed by the classifier.

Sign conventions here follow the cocycle, so the Cartan involution of the
split form reads theta(e_a) = e_{-a}; any consistent sign choice gives an
isomorphic algebra, and every downstream consumer compares fingerprints
only.  Non-simply-laced systems are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .causality import lookup_causal_pairs
from .crown import CrownPolytope, extreme_orbits
from .liealg import (
    EXTRA_FINGERPRINTS,
    LieAlgebraRealization,
    RealFormFingerprint,
    _validate,
    component_at,
    fingerprint,
)
from .linalg import Vector, dot
from .rootsys import RootDatum, build_root_system, dual_basis, is_irreducible, simple_coefficients

_ZERO = Q(0)
_ONE = Q(1)


@dataclass(eq=False)
class ChevalleyAlgebra:
    """Integer structure constants over a simply-laced root datum.

    basis lists ("h", i) coroot labels then ("e", root) labels in datum
    order; constants holds N with [e_a, e_b] = N e_{a+b} for root pairs
    whose sum is again a root; realization is the split real form.
    """

    datum: RootDatum
    basis: tuple
    constants: dict
    realization: LieAlgebraRealization


def _split_name(rd: RootDatum) -> str:
    if rd.family == "E6":
        return "e6(6)"
    if rd.family == "E7":
        return "e7(7)"
    return f"split({rd.family}{rd.rank})"


def build_chevalley(rd: RootDatum) -> ChevalleyAlgebra:
    """Chevalley-basis model with cocycle signs; simply-laced data only."""
    if not is_irreducible(rd):
        raise ValueError("chevalley construction needs an irreducible datum")
    lengths = {dot(a, a) for a in rd.roots}
    if len(lengths) != 1:
        raise ValueError(
            f"{rd.family}{rd.rank}: not simply laced; no Chevalley model here"
        )
    norm = lengths.pop()
    if norm != 2:
        raise ValueError(
            f"{rd.family}{rd.rank}: expected roots of squared length 2, got {norm}"
        )
    r = rd.rank
    roots = rd.roots
    index = {a: k for k, a in enumerate(roots)}
    coeff_rows = []
    for a in roots:
        cs = simple_coefficients(rd, a)
        if any(c.denominator != 1 for c in cs):
            raise ValueError("root with non-integral simple expansion")
        coeff_rows.append(tuple(int(c) for c in cs))
    # parity matrix of the sign cocycle on the simple basis
    parity = [[0] * r for _ in range(r)]
    for i in range(r):
        parity[i][i] = 1
        for j in range(i):
            parity[i][j] = int(dot(rd.simple[i], rd.simple[j])) % 2

    def eps(ca, cb) -> int:
        s = 0
        for i in range(r):
            if ca[i]:
                row = parity[i]
                for j in range(r):
                    if cb[j] and row[j]:
                        s += ca[i] * cb[j]
        return -1 if s % 2 else 1

    d = r + len(roots)
    bracket: dict = {}
    constants: dict = {}
    for i in range(r):
        hi = rd.simple[i]
        for a_idx, a in enumerate(roots):
            c = dot(a, hi)
            if c:
                bracket[(i, r + a_idx)] = ((r + a_idx, c),)
    for a_idx, a in enumerate(roots):
        ca = coeff_rows[a_idx]
        for b_idx in range(a_idx + 1, len(roots)):
            b = roots[b_idx]
            total = tuple(x + y for x, y in zip(a, b))
            if all(c == 0 for c in total):
                ent = tuple(
                    (i, Q(-ca[i])) for i in range(r) if ca[i]
                )
                bracket[(r + a_idx, r + b_idx)] = ent
                continue
            t_idx = index.get(total)
            if t_idx is None:
                continue
            n = eps(ca, coeff_rows[b_idx])
            bracket[(r + a_idx, r + b_idx)] = ((r + t_idx, Q(n)),)
            constants[(a, b)] = n
            constants[(b, a)] = -n
    theta = []
    for i in range(r):
        theta.append(tuple(-_ONE if t == i else _ZERO for t in range(d)))
    for a in roots:
        neg = index[tuple(-c for c in a)]
        theta.append(tuple(_ONE if t == r + neg else _ZERO for t in range(d)))
    alg = LieAlgebraRealization(
        name=_split_name(rd),
        basis=None,
        bracket=bracket,
        theta=tuple(theta),
        cartan_subspace=tuple(
            tuple(_ONE if t == i else _ZERO for t in range(d)) for i in range(r)
        ),
        chart=tuple(rd.simple),
        datum=rd,
    )
    _validate(alg)
    labels = tuple(("h", i) for i in range(r)) + tuple(("e", a) for a in roots)
    return ChevalleyAlgebra(datum=rd, basis=labels, constants=constants, realization=alg)


def split_real_form(ca: ChevalleyAlgebra) -> LieAlgebraRealization:
    """The real span of the Chevalley basis with its split Cartan involution."""
    return ca.realization


def complex_as_real(ca: ChevalleyAlgebra) -> LieAlgebraRealization:
    """Realification of the complex algebra, with compact-form conjugation.

    Basis is the Chevalley basis followed by its i-multiples; theta is the
    antilinear compact conjugation h -> -h, e_a -> e_{-a}, i x -> -i theta(x).
    The split subspace stays the real coroot span, so the chart carries over.
    """
    split = ca.realization
    d = split.dim
    r = ca.datum.rank
    bracket: dict = {}
    for (i, j), ent in split.bracket.items():
        bracket[(i, j)] = ent
        bracket[(i, d + j)] = tuple((k + d, c) for k, c in ent)
        bracket[(j, d + i)] = tuple((k + d, -c) for k, c in ent)
        bracket[(d + i, d + j)] = tuple((k, -c) for k, c in ent)
    theta = []
    for a in range(d):
        theta.append(tuple(split.theta[a]) + (_ZERO,) * d)
    for a in range(d):
        theta.append((_ZERO,) * d + tuple(-c for c in split.theta[a]))
    name = {"E6": "e6C", "E7": "e7C"}.get(
        ca.datum.family, f"complex({ca.datum.family}{ca.datum.rank})"
    )
    alg = LieAlgebraRealization(
        name=name,
        basis=None,
        bracket=bracket,
        theta=tuple(theta),
        cartan_subspace=tuple(
            tuple(_ONE if t == i else _ZERO for t in range(2 * d)) for i in range(r)
        ),
        chart=tuple(ca.datum.simple),
        datum=ca.datum,
    )
    _validate(alg)
    return alg


# ---------------------------------------------------------------------------
# reference fingerprints for the non-split exceptional forms

_CHEV_CACHE: dict = {}
_REALIFIED_CACHE: dict = {}


def _chevalley(family: str, rank: int) -> ChevalleyAlgebra:
    key = (family, rank)
    if key not in _CHEV_CACHE:
        _CHEV_CACHE[key] = build_chevalley(build_root_system(family, rank))
    return _CHEV_CACHE[key]


def _realified(family: str, rank: int) -> LieAlgebraRealization:
    key = (family, rank)
    if key not in _REALIFIED_CACHE:
        _REALIFIED_CACHE[key] = complex_as_real(_chevalley(family, rank))
    return _REALIFIED_CACHE[key]


def compact_twisted_form(ca: ChevalleyAlgebra, weight: Vector):
    """Basis of the real form u^sigma + i u^{-sigma} inside the realification.

    sigma is the inner involution of the compact form with phase (-1)^{<a,w>}
    on the root space of a; the weight must pair integrally with every root.
    Returns coordinate vectors relative to complex_as_real(ca).
    """
    rd = ca.datum
    split = ca.realization
    d = split.dim
    r = rd.rank
    index = {a: k for k, a in enumerate(rd.roots)}
    basis = []
    for j in range(r):
        basis.append(_unit2(2 * d, d + j))  # i h_j, fixed by sigma
    for a in rd.positive:
        s = dot(a, weight)
        if s.denominator != 1:
            raise ValueError("weight pairs non-integrally with a root")
        pa = r + index[a]
        na = r + index[tuple(-c for c in a)]
        if int(s) % 2 == 0:
            u = {pa: _ONE, na: _ONE}
            v = {d + pa: _ONE, d + na: -_ONE}
        else:
            u = {d + pa: _ONE, d + na: _ONE}
            v = {pa: _ONE, na: -_ONE}
        basis.append(_from_sparse(2 * d, u))
        basis.append(_from_sparse(2 * d, v))
    return tuple(basis)


def _unit2(n: int, i: int) -> tuple:
    return tuple(_ONE if t == i else _ZERO for t in range(n))


def _from_sparse(n: int, sp: dict) -> tuple:
    return tuple(sp.get(t, _ZERO) for t in range(n))


_REFERENCE_WEIGHTS = {
    "e6(-14)": ("E6", 6, 5),  # last fundamental weight, minuscule
    "e7(-25)": ("E7", 7, 6),
}


def ensure_reference_fingerprints(names=("e6(-14)", "e7(-25)")) -> None:
    """Compute and register the twisted-form fingerprints the tables cite."""
    for name in names:
        if name in EXTRA_FINGERPRINTS:
            continue
        family, rank, widx = _REFERENCE_WEIGHTS[name]
        ca = _chevalley(family, rank)
        cx = _realified(family, rank)
        w = dual_basis(ca.datum)[widx]
        basis = compact_twisted_form(ca, w)
        EXTRA_FINGERPRINTS[name] = fingerprint(list(basis), cx)


# ---------------------------------------------------------------------------
# boundary classification for the exceptional cases

_CASE_TABLE = {
    "e6(6)": ("E6", 6, "split", "e6(6)"),
    "e7(7)": ("E7", 7, "split", "e7(7)"),
    "e6-complex": ("E6", 6, "complex", "e6C"),
    "e7-complex": ("E7", 7, "complex", "e7C"),
}
_CASE_ALIASES = {"e6c": "e6-complex", "e7c": "e7-complex"}
_BOUNDARY_CACHE: dict = {}


def exceptional_boundary(case: str):
    """Boundary components of the four in-scope exceptional crown domains."""
    key = case.strip().lower()
    key = _CASE_ALIASES.get(key, key)
    if key not in _CASE_TABLE:
        raise ValueError(
            f"unknown case {case!r}; expected one of {', '.join(sorted(_CASE_TABLE))}"
        )
    cached = _BOUNDARY_CACHE.get(key)
    if cached is not None:
        return cached
    family, rank, kind, lookup_name = _CASE_TABLE[key]
    alg = (
        _chevalley(family, rank).realization
        if kind == "split"
        else _realified(family, rank)
    )
    targets = lookup_causal_pairs(lookup_name)
    if any(t in _REFERENCE_WEIGHTS for t in targets):
        ensure_reference_fingerprints([t for t in targets if t in _REFERENCE_WEIGHTS])
    dec = extreme_orbits(CrownPolytope(alg.datum))
    out = []
    for orb in dec.orbits:
        integral = all(
            dot(a, orb.representative).denominator == 1 for a in alg.datum.roots
        )
        cands = targets if integral else []
        out.append(component_at(alg, orb.representative, orb.size, cands))
    _BOUNDARY_CACHE[key] = out
    return out
