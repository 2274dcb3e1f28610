"""Weyl group orbits computed by reflection closure.

The group never gets materialized as matrices; orbits come from a BFS over
the simple reflections, and orbit identity is tested through the dominant
representative.  Reflections fix the orthogonal complement of the root span
pointwise, so vectors may carry dead ambient coordinates (E6/E7 live in Q^8).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .linalg import Vector, dot, is_zero_vector
from .rootsys import RootDatum


@dataclass(frozen=True)
class WeylOrbit:
    representative: Vector  # dominant element
    elements: tuple[Vector, ...]  # lex-sorted
    size: int


def reflect(v: Vector, alpha: Vector) -> Vector:
    """Orthogonal reflection of v in the hyperplane alpha^perp."""
    if is_zero_vector(alpha):
        raise ValueError("cannot reflect in the zero vector")
    c = Q(2) * dot(v, alpha) / dot(alpha, alpha)
    return tuple(b - c * a for b, a in zip(v, alpha))


def dominant_representative(rd: RootDatum, v: Vector) -> Vector:
    """The unique dominant element of W(v): <result, alpha_j> >= 0 for all j."""
    cur = v
    while True:
        for alpha in rd.simple:
            if dot(cur, alpha) < 0:
                cur = reflect(cur, alpha)
                break
        else:
            return cur


def orbit(rd: RootDatum, v: Vector) -> WeylOrbit:
    """Full W-orbit of v via BFS over simple reflections."""
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for alpha in rd.simple:
                img = reflect(w, alpha)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    elements = tuple(sorted(seen))
    return WeylOrbit(
        representative=dominant_representative(rd, v),
        elements=elements,
        size=len(elements),
    )


def same_orbit(rd: RootDatum, v: Vector, w: Vector) -> bool:
    return dominant_representative(rd, v) == dominant_representative(rd, w)


def apply_word(rd: RootDatum, word: list[int], v: Vector) -> Vector:
    """Apply s_{i1} s_{i2} ... s_{ik} (indices into rd.simple) to v.

    The word acts right-to-left, matching composition of maps.
    """
    cur = v
    for i in reversed(word):
        cur = reflect(cur, rd.simple[i])
    return cur
