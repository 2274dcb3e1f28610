"""Crown polytope combinatorics.

The polytope lives in crown units: closure(Omega) = {X : |<alpha,X>| <= 1 for
all alpha}, so every vertex has rational coordinates.  Extremality is decided
by the exact rank of the active constraint set, not by searching for convex
combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations, product

from .linalg import Vector, dot, rank, solve_square
from .names import parse_algebra_name
from .rootsys import RootDatum, build_root_system, is_irreducible, scale_datum
from .weyl import WeylOrbit, dominant_representative, orbit


@dataclass(frozen=True)
class CrownPolytope:
    """{X : |<alpha,X>| <= 1, alpha in Sigma+} in crown units."""

    datum: RootDatum


@dataclass(frozen=True)
class ExtremeDecomposition:
    polytope: CrownPolytope
    orbits: tuple[WeylOrbit, ...]  # dominant representatives, descending lex


def membership(P: CrownPolytope, X: Vector) -> str:
    """One of "interior", "boundary", "exterior"."""
    m = max((abs(dot(a, X)) for a in P.datum.positive), default=Q(0))
    if m < 1:
        return "interior"
    if m == 1:
        return "boundary"
    return "exterior"


def extreme_candidates(P: CrownPolytope) -> list[Vector]:
    """The dominant vertex candidates omega_j/m_j (requires irreducibility)."""
    rd = P.datum
    if not is_irreducible(rd):
        raise ValueError("extreme-point candidates need an irreducible system")
    _, m = rd.highest
    return [
        tuple(c / m[j] for c in rd.dual_basis[j]) for j in range(rd.rank)
    ]


def active_roots(P: CrownPolytope, Y: Vector) -> tuple[Vector, ...]:
    return tuple(a for a in P.datum.roots if abs(dot(a, Y)) == 1)


def is_extreme_point(P: CrownPolytope, Y: Vector) -> bool:
    """Vertex test: on the closure, and active roots span span(Sigma)."""
    where = membership(P, Y)
    if where == "exterior":
        raise ValueError("point lies outside the closed polytope")
    if where == "interior":
        return False
    span_dim = rank([list(a) for a in P.datum.simple])
    return rank([list(a) for a in active_roots(P, Y)]) == span_dim


def extreme_orbits(P: CrownPolytope) -> ExtremeDecomposition:
    """Exact decomposition of the extreme-point set into Weyl orbits."""
    rd = P.datum
    reps = {}
    for cand in extreme_candidates(P):
        if not is_extreme_point(P, cand):
            continue
        # candidates are dominant already; diagram symmetries may still
        # produce W-equal candidates, so key by dominant representative
        reps[dominant_representative(rd, cand)] = None
    orbits = [orbit(rd, rep) for rep in reps]
    orbits.sort(key=lambda o: o.representative, reverse=True)
    return ExtremeDecomposition(polytope=P, orbits=tuple(orbits))


def brute_force_vertices(P: CrownPolytope) -> set[Vector]:
    """Independent vertex oracle: solve all maximal active systems.

    Exponential in the rank; guarded at rank <= 4.
    """
    rd = P.datum
    if rd.rank > 4:
        raise ValueError("brute-force oracle is limited to rank <= 4")
    simple = rd.simple
    r = len(simple)
    found: set[Vector] = set()
    for subset in combinations(rd.positive, r):
        gram = [[dot(a, s) for s in simple] for a in subset]
        for signs in product((Q(1), Q(-1)), repeat=r):
            coeffs = solve_square(gram, list(signs))
            if coeffs is None:
                break  # singular subset: no sign pattern can work
            X = tuple(
                sum((coeffs[k] * simple[k][t] for k in range(r)), Q(0))
                for t in range(rd.ambient_dim)
            )
            if X in found:
                continue
            if max(abs(dot(a, X)) for a in rd.positive) == 1:
                found.add(X)
    return found


def xi0_polytope(g_name: str) -> CrownPolytope:
    """Polytope of the doubly restricted system for so(p,q) / so(n,C).

    Type C_p with doubled coordinates when the system is split-even
    (p = q or n = 2p), else type BC_p; either way a superset of the
    ordinary restricted system, so the polytope shrinks.
    """
    parsed = parse_algebra_name(g_name)
    if parsed.kind == "so_pq":
        p, q = parsed.params
        if p > q:
            p, q = q, p
        if p < 2:
            raise ValueError("doubly restricted analysis needs min(p,q) >= 2")
        even = p == q
    elif parsed.kind == "so_C":
        n = parsed.params[0]
        if n < 4:
            raise ValueError("doubly restricted analysis needs n >= 4")
        p, even = n // 2, n % 2 == 0
    else:
        raise ValueError("xi0 polytope is defined for so(p,q) and so(n,C) only")
    if even:
        return CrownPolytope(datum=scale_datum(build_root_system("C", p), 2))
    return CrownPolytope(datum=build_root_system("BC", p))
