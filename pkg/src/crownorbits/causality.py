"""Causality layer: the ad-spectrum criterion and the reference tables.

A boundary orbit representative Y gives a symmetric pair exactly when every
root evaluation <alpha, Y> lies in {-1, 0, 1} (crown units); half-integral
values still give a well-defined twisted endomorphism, anything else does
not.  The tables list the known non-compactly causal pairs and the Cayley
subfamily; they serve as identification targets only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .crown import CrownPolytope, extreme_orbits
from .linalg import Vector, dot, rank
from .names import join_sum, parse_algebra_name, so_name, sp_name, su_name
from .rootsys import RootDatum


@dataclass(frozen=True)
class SpectrumReport:
    values: tuple[Q, ...]  # distinct evaluations, sorted, always containing 0
    is_half_integral: bool
    is_involutive: bool


@dataclass(frozen=True)
class CausalReferenceTable:
    rows: tuple[tuple[str, str], ...]
    cayley_rows: tuple[tuple[str, str], ...]


REFERENCE_TABLE = CausalReferenceTable(
    rows=(
        ("sp(n,R)", "gl(n,R)"),
        ("su(n,n)", "sl(n,C)+R"),
        ("so*(4n)", "sl(n,H)+R"),
        ("so(p,q)", "so(1,p-1)+so(1,q-1)"),
        ("so(n,n)", "so(n,C)"),
        ("sp(n,n)", "sp(n,C)"),
        ("sl(n,R)", "so(q,n-q)"),
        ("sl(n,H)", "sp(q,n-q)"),
        ("so(2n,C)", "so*(2n)"),
        ("so(n+2,C)", "so(2,n)"),
        ("sp(n,C)", "sp(n,R)"),
        ("sl(n,C)", "su(q,n-q)"),
        ("e6(6)", "sp(2,2)"),
        ("e6(-26)", "f4(-20)"),
        ("e6C", "e6(-14)"),
        ("e7(7)", "su*(8)"),
        ("e7(-25)", "e6(-26)+R"),
        ("e7C", "e7(-25)"),
    ),
    cayley_rows=(
        ("sp(n,R)", "gl(n,R)"),
        ("su(n,n)", "sl(n,C)+R"),
        ("so*(4n)", "sl(n,H)+R"),
        ("so(2,n)", "so(1,n-1)+R"),
        ("e7(-25)", "e6(-26)+R"),
    ),
)


def _span_dim(rd: RootDatum) -> int:
    return rank([list(a) for a in rd.simple])


def ad_spectrum(rd: RootDatum, Y: Vector) -> SpectrumReport:
    """Distinct values <alpha, Y> over the root system, plus 0."""
    if rank([list(a) for a in rd.simple] + [list(Y)]) != _span_dim(rd):
        raise ValueError("Y must lie in the span of the root system")
    vals = {dot(a, Y) for a in rd.roots}
    vals.add(Q(0))
    half = all((2 * v).denominator == 1 for v in vals)
    invol = all(v in (Q(-1), Q(0), Q(1)) for v in vals)
    return SpectrumReport(
        values=tuple(sorted(vals)),
        is_half_integral=half,
        is_involutive=invol,
    )


def component_flags(rd: RootDatum) -> list[dict]:
    """Per extreme orbit (same order as crown.extreme_orbits): symmetry flags.

    symmetric and totally_real coincide: the boundary component is a
    symmetric pair iff the representative's spectrum is involutive, and
    that is also exactly the totally-real condition.
    """
    flags = []
    for orb in extreme_orbits(CrownPolytope(datum=rd)).orbits:
        rep = orb.representative
        spec = ad_spectrum(rd, rep)
        flags.append(
            {"symmetric": spec.is_involutive, "totally_real": spec.is_involutive}
        )
    return flags


def lookup_causal_pairs(g_name: str) -> list[str]:
    """Parameter-substituted h-entries of the reference table for g.

    Several rows may match one algebra (for example so(n,n)); all matches
    are returned, in table order.  Algebras not in the table give [].
    """
    parsed = parse_algebra_name(g_name)
    kind, params = parsed.kind, parsed.params
    out: list[str] = []
    if kind == "sp_R":
        out.append(f"gl({params[0]},R)")
    elif kind == "su_pq" and params[0] == params[1]:
        out.append(f"sl({params[0]},C)+R")
    elif kind == "so_star":
        if params[0] % 4 == 0:
            out.append(join_sum(f"sl({params[0] // 4},H)", "R"))
    elif kind == "so_pq":
        p, q = sorted(params)
        out.append(join_sum(so_name(1, p - 1), so_name(1, q - 1)))
        if p == q:
            out.append(f"so({p},C)")
    elif kind == "sp_pq":
        if params[0] == params[1]:
            out.append(f"sp({params[0]},C)")
    elif kind == "sp_C":
        out.append(f"sp({params[0]},R)")
    elif kind == "sl_R":
        n = params[0]
        out.extend(so_name(q, n - q) for q in range(1, n))
    elif kind == "sl_H":
        n = params[0]
        out.extend(sp_name(q, n - q) for q in range(1, n))
    elif kind == "sl_C":
        n = params[0]
        out.extend(su_name(q, n - q) for q in range(1, n))
    elif kind == "so_C":
        n = params[0]
        if n >= 3:
            out.append(so_name(2, n - 2))
        if n % 2 == 0 and n >= 4:
            out.append(f"so*({n})")
    elif kind == "e6_6":
        out.append("sp(2,2)")
    elif kind == "e6_m26":
        out.append("f4(-20)")
    elif kind == "e6_C":
        out.append("e6(-14)")
    elif kind == "e7_7":
        out.append("su*(8)")
    elif kind == "e7_m25":
        out.append("e6(-26)+R")
    elif kind == "e7_C":
        out.append("e7(-25)")
    return out
