"""Restricted root system data in exact rational coordinates.

Families: A, B, C, D, BC (parametric rank) and the two exceptional systems
E6, E7 realized inside Q^8.  The C family uses the half-coordinate
normalization {1/2(+-e_i +- e_j)} \\ {0} whose long roots are +-e_i; all
vectors are crown units, meaning the polytope boundary later reads
|<alpha, X>| = 1 with no transcendental factor anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import product
from math import factorial

from .linalg import Vector, dot, solve_rref, solve_square, vec

FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7")

HALF = Q(1, 2)


@dataclass(frozen=True)
class RootDatum:
    """Immutable root system snapshot; all coordinates are Fractions."""

    family: str
    rank: int
    ambient_dim: int
    roots: tuple[Vector, ...]
    simple: tuple[Vector, ...]
    positive: tuple[Vector, ...]
    dual_basis: tuple[Vector, ...]
    highest: tuple[Vector, tuple[int, ...]]
    weyl_order: int


def _unit(n: int, i: int) -> list[Q]:
    u = [Q(0)] * n
    u[i] = Q(1)
    return u


def _a_family(rank: int):
    n = rank + 1
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [Q(0)] * n
                v[i], v[j] = Q(1), Q(-1)
                roots.append(tuple(v))
    positive = [r for r in roots if next(c for c in r if c) > 0]
    simple = []
    for i in range(rank):
        v = [Q(0)] * n
        v[i], v[i + 1] = Q(1), Q(-1)
        simple.append(tuple(v))
    return n, roots, simple, positive, factorial(n)


def _b_family(rank: int):
    n = rank
    roots, positive = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in product((1, -1), repeat=2):
                v = [Q(0)] * n
                v[i], v[j] = Q(si), Q(sj)
                roots.append(tuple(v))
                if si > 0:
                    positive.append(tuple(v))
    for i in range(n):
        for s in (1, -1):
            v = [Q(0)] * n
            v[i] = Q(s)
            roots.append(tuple(v))
            if s > 0:
                positive.append(tuple(v))
    simple = [
        tuple(Q(1) if k == i else Q(-1) if k == i + 1 else Q(0) for k in range(n))
        for i in range(n - 1)
    ]
    simple.append(tuple(_unit(n, n - 1)))
    return n, roots, simple, positive, 2**n * factorial(n)


def _c_family(rank: int):
    n = rank
    roots, positive = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in product((1, -1), repeat=2):
                v = [Q(0)] * n
                v[i], v[j] = si * HALF, sj * HALF
                roots.append(tuple(v))
                if si > 0:
                    positive.append(tuple(v))
    for i in range(n):
        for s in (1, -1):
            v = [Q(0)] * n
            v[i] = Q(s)
            roots.append(tuple(v))
            if s > 0:
                positive.append(tuple(v))
    simple = [
        tuple(HALF if k == i else -HALF if k == i + 1 else Q(0) for k in range(n))
        for i in range(n - 1)
    ]
    simple.append(tuple(_unit(n, n - 1)))
    return n, roots, simple, positive, 2**n * factorial(n)


def _d_family(rank: int):
    n = rank
    roots, positive = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in product((1, -1), repeat=2):
                v = [Q(0)] * n
                v[i], v[j] = Q(si), Q(sj)
                roots.append(tuple(v))
                if si > 0:
                    positive.append(tuple(v))
    simple = [
        tuple(Q(1) if k == i else Q(-1) if k == i + 1 else Q(0) for k in range(n))
        for i in range(n - 1)
    ]
    simple.append(
        tuple(Q(1) if k in (n - 2, n - 1) else Q(0) for k in range(n))
    )
    return n, roots, simple, positive, 2 ** (n - 1) * factorial(n)


def _bc_family(rank: int):
    n, roots, simple, positive, order = _b_family(rank)
    for i in range(n):
        for s in (2, -2):
            v = [Q(0)] * n
            v[i] = Q(s)
            roots.append(tuple(v))
            if s > 0:
                positive.append(tuple(v))
    return n, roots, simple, positive, order


def _e6_system():
    # Integer part: +-e_i +- e_j for j < i <= 5; half part: vectors
    # s/2 (e_8-e_7-e_6) + 1/2 sum c_j e_j, sign parity tied to s.
    roots, positive = [], []
    for j in range(5):
        for i in range(j + 1, 5):
            for si, sj in product((1, -1), repeat=2):
                v = [Q(0)] * 8
                v[i], v[j] = Q(si), Q(sj)
                roots.append(tuple(v))
                if si > 0:
                    positive.append(tuple(v))
    for s in (1, -1):
        need_odd = s < 0
        for signs in product((1, -1), repeat=5):
            minus = sum(1 for c in signs if c < 0)
            if (minus % 2 == 1) != need_odd:
                continue
            v = [c * HALF for c in signs] + [-s * HALF, -s * HALF, s * HALF]
            roots.append(tuple(v))
            if s > 0:
                positive.append(tuple(v))
    a1 = tuple(
        vec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF])
    )
    simple = [
        a1,
        vec([1, 1, 0, 0, 0, 0, 0, 0]),
        vec([-1, 1, 0, 0, 0, 0, 0, 0]),
        vec([0, -1, 1, 0, 0, 0, 0, 0]),
        vec([0, 0, -1, 1, 0, 0, 0, 0]),
        vec([0, 0, 0, -1, 1, 0, 0, 0]),
    ]
    return 8, roots, simple, positive, 51840


def _e7_system():
    roots, positive = [], []
    for i in range(6):
        for j in range(i + 1, 6):
            for si, sj in product((1, -1), repeat=2):
                v = [Q(0)] * 8
                # positive integer roots carry +1 on the larger index
                v[i], v[j] = Q(si), Q(sj)
                roots.append(tuple(v))
                if sj > 0:
                    positive.append(tuple(v))
    for s in (1, -1):
        v = [Q(0)] * 8
        v[6], v[7] = Q(-s), Q(s)
        roots.append(tuple(v))
        if s > 0:
            positive.append(tuple(v))
    for s in (1, -1):
        for signs in product((1, -1), repeat=6):
            minus = sum(1 for c in signs if c < 0)
            if minus % 2 != 1:  # odd minus count among the first six
                continue
            v = [s * c * HALF for c in signs] + [-s * HALF, s * HALF]
            roots.append(tuple(v))
            if s > 0:
                positive.append(tuple(v))
    simple = [
        tuple(vec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF])),
        vec([1, 1, 0, 0, 0, 0, 0, 0]),
        vec([-1, 1, 0, 0, 0, 0, 0, 0]),
        vec([0, -1, 1, 0, 0, 0, 0, 0]),
        vec([0, 0, -1, 1, 0, 0, 0, 0]),
        vec([0, 0, 0, -1, 1, 0, 0, 0]),
        vec([0, 0, 0, 0, -1, 1, 0, 0]),
    ]
    return 8, roots, simple, positive, 2903040


_EXPECTED_COUNTS = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
    "BC": lambda r: 2 * r * r + 2 * r,
    "E6": lambda r: 72,
    "E7": lambda r: 126,
}


def simple_coefficients(rd: RootDatum, v: Vector) -> Vector:
    """Coordinates of v in the simple-root basis (exact; v must lie in span)."""
    cols = [[s[i] for s in rd.simple] for i in range(rd.ambient_dim)]
    sol = solve_rref(cols, v)
    if sol is None:
        raise ValueError("vector lies outside the root span")
    return sol


def _find_highest(roots, positive, simple, ambient_dim):
    rootset = set(roots)
    candidates = []
    for g in positive:
        if any(tuple(a + b for a, b in zip(g, s)) in rootset for s in simple):
            continue
        candidates.append(g)
    # reducible data (D_2 testing case) has one maximal root per factor
    beta = max(candidates)
    cols = [[s[i] for s in simple] for i in range(ambient_dim)]
    sol = solve_rref(cols, beta)
    coeffs = []
    for c in sol:
        if c.denominator != 1 or c < 0:
            raise ValueError("highest root has non-integral expansion")
        coeffs.append(int(c))
    return beta, tuple(coeffs)


def _dual_basis(simple: list[Vector]) -> tuple[Vector, ...]:
    r = len(simple)
    gram = [[dot(simple[k], simple[j]) for j in range(r)] for k in range(r)]
    out = []
    for i in range(r):
        rhs = [Q(1) if j == i else Q(0) for j in range(r)]
        c = solve_square(gram, rhs)
        if c is None:
            raise ValueError("simple roots are degenerate")
        omega = tuple(
            sum((c[k] * simple[k][t] for k in range(r)), Q(0))
            for t in range(len(simple[0]))
        )
        out.append(omega)
    return tuple(out)


_BUILDERS = {
    "A": _a_family,
    "B": _b_family,
    "C": _c_family,
    "D": _d_family,
    "BC": _bc_family,
}


def build_root_system(family: str, rank: int) -> RootDatum:
    """Construct the root datum for the given family and rank.

    Raises ValueError for unknown families or out-of-range ranks.
    """
    if family not in FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}"
        )
    if family == "E6":
        if rank != 6:
            raise ValueError("family E6 requires rank 6")
        ambient, roots, simple, positive, order = _e6_system()
    elif family == "E7":
        if rank != 7:
            raise ValueError("family E7 requires rank 7")
        ambient, roots, simple, positive, order = _e7_system()
    else:
        min_rank = 2 if family == "D" else 1
        if rank < min_rank:
            raise ValueError(f"family {family} requires rank >= {min_rank}")
        ambient, roots, simple, positive, order = _BUILDERS[family](rank)
    expected = _EXPECTED_COUNTS[family](rank)
    if len(roots) != expected or len(positive) * 2 != expected:
        raise AssertionError("root count mismatch during construction")
    highest = _find_highest(roots, positive, simple, ambient)
    datum = RootDatum(
        family=family,
        rank=rank,
        ambient_dim=ambient,
        roots=tuple(sorted(roots)),
        simple=tuple(simple),
        positive=tuple(sorted(positive)),
        dual_basis=_dual_basis(list(simple)),
        highest=highest,
        weyl_order=order,
    )
    return datum


def dual_basis(rd: RootDatum) -> tuple[Vector, ...]:
    """Fundamental coweight-style dual basis: <omega_i, alpha_j> = delta_ij."""
    return rd.dual_basis


def highest_root(rd: RootDatum) -> tuple[Vector, tuple[int, ...]]:
    """Highest root with its simple-root coefficients."""
    return rd.highest


def weyl_order(rd: RootDatum) -> int:
    """Order of the Weyl group (closed form per family)."""
    return rd.weyl_order


def is_irreducible(rd: RootDatum) -> bool:
    """Connectivity of the Coxeter graph on the simple roots."""
    r = rd.rank
    if r <= 1:
        return True
    adj = {
        i: [
            j
            for j in range(r)
            if j != i and dot(rd.simple[i], rd.simple[j]) != 0
        ]
        for i in range(r)
    }
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == r


def scale_datum(rd: RootDatum, factor) -> RootDatum:
    """Same combinatorial system with all roots scaled by a rational factor."""
    f = Q(factor)
    if f == 0:
        raise ValueError("scale factor must be nonzero")
    scale = lambda v: tuple(f * c for c in v)
    inv = lambda v: tuple(c / f for c in v)
    return RootDatum(
        family=rd.family,
        rank=rd.rank,
        ambient_dim=rd.ambient_dim,
        roots=tuple(sorted(scale(v) for v in rd.roots)),
        simple=tuple(scale(v) for v in rd.simple),
        positive=tuple(sorted(scale(v) for v in rd.positive)),
        dual_basis=tuple(inv(v) for v in rd.dual_basis),
        highest=(scale(rd.highest[0]), rd.highest[1]),
        weyl_order=rd.weyl_order,
    )
