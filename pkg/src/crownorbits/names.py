"""Algebra-name grammar shared by the classification drivers and the CLI.

Accepted forms (whitespace-insensitive, case-insensitive in the field letter):
sl(n,R|C|H), so(p,q), so(n,C), sp(n,R|C), sp(p,q), su(p,q), so*(2n),
e6(6), e7(7), e6C, e7C, e6(-26), e7(-25).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

GRAMMAR = (
    "sl(n,R|C|H), so(p,q), so(n,C), sp(n,R|C), sp(p,q), su(p,q), so*(2n), "
    "e6(6), e7(7), e6C, e7C, e6(-26), e7(-25)"
)

_EXCEPTIONAL = {
    "e6(6)": "e6_6",
    "e7(7)": "e7_7",
    "e6c": "e6_C",
    "e7c": "e7_C",
    "e6(-26)": "e6_m26",
    "e7(-25)": "e7_m25",
}

_PATTERNS = [
    (re.compile(r"^sl\((\d+),([rch])\)$"), "sl"),
    (re.compile(r"^so\((\d+),c\)$"), "so_C"),
    (re.compile(r"^so\((\d+),(\d+)\)$"), "so_pq"),
    (re.compile(r"^so\*\((\d+)\)$"), "so_star"),
    (re.compile(r"^sp\((\d+),([rc])\)$"), "sp"),
    (re.compile(r"^sp\((\d+),(\d+)\)$"), "sp_pq"),
    (re.compile(r"^su\((\d+),(\d+)\)$"), "su_pq"),
]


@dataclass(frozen=True)
class ParsedName:
    kind: str  # sl_R, sl_C, sl_H, so_pq, so_C, so_star, sp_R, sp_C, sp_pq, su_pq, e6_6, ...
    params: tuple[int, ...]

    def canonical(self) -> str:
        k, p = self.kind, self.params
        if k in ("sl_R", "sl_C", "sl_H"):
            return f"sl({p[0]},{k[-1]})"
        if k == "so_pq":
            return f"so({p[0]},{p[1]})"
        if k == "so_C":
            return f"so({p[0]},C)"
        if k == "so_star":
            return f"so*({p[0]})"
        if k in ("sp_R", "sp_C"):
            return f"sp({p[0]},{k[-1]})"
        if k == "sp_pq":
            return f"sp({p[0]},{p[1]})"
        if k == "su_pq":
            return f"su({p[0]},{p[1]})"
        return {
            "e6_6": "e6(6)", "e7_7": "e7(7)", "e6_C": "e6C", "e7_C": "e7C",
            "e6_m26": "e6(-26)", "e7_m25": "e7(-25)",
        }[k]


def parse_algebra_name(text: str) -> ParsedName:
    """Parse an algebra label; raises ValueError listing the grammar."""
    s = re.sub(r"\s+", "", text).lower()
    if s in _EXCEPTIONAL:
        return ParsedName(_EXCEPTIONAL[s], ())
    for pat, kind in _PATTERNS:
        m = pat.match(s)
        if not m:
            continue
        if kind in ("sl", "sp"):
            n = int(m.group(1))
            return ParsedName(f"{kind}_{m.group(2).upper()}", (n,))
        params = tuple(int(g) for g in m.groups())
        return ParsedName(kind, params)
    raise ValueError(f"cannot parse algebra name {text!r}; accepted: {GRAMMAR}")


def so_name(a: int, b: int) -> str:
    """Canonical indefinite-orthogonal label; degenerate cases collapse."""
    a, b = sorted((a, b))
    if a + b <= 1:
        return ""
    if (a, b) == (1, 1):
        return "R"  # so(1,1) is the 1-dim abelian algebra
    if a == 0:
        return f"so({b})"
    return f"so({a},{b})"


def su_name(a: int, b: int) -> str:
    a, b = sorted((a, b))
    if a + b <= 1:
        return ""
    if a == 0:
        return f"su({b})"
    return f"su({a},{b})"


def sp_name(a: int, b: int) -> str:
    a, b = sorted((a, b))
    if a + b == 0:
        return ""
    if a == 0:
        return f"sp({b})"
    return f"sp({a},{b})"


def join_sum(*parts: str) -> str:
    """Direct-sum label: drop trivial factors, keep order, R summands last."""
    kept = [p for p in parts if p]
    kept.sort(key=lambda p: p == "R")
    return "+".join(kept)
