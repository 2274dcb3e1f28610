"""Command-line front end for the classification engine.

Subcommands: roots, extremes, classify, jordan, verify.  Reports render as
plain tables or canonical JSON (sorted keys, two-space indent, rationals as
"p/q" strings) suitable for golden-file comparison.  The exit status is
nonzero when any component stays unidentified or a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from re import fullmatch

from . import chevalley
from .causality import component_flags
from .chevalley import exceptional_boundary
from .crown import CrownPolytope, extreme_orbits
from .jordan import (
    build_jordan,
    frame_point,
    jordan_det,
    stratum_stabilizer_algebra,
    xi0_extreme_orbits,
)
from .liealg import (
    _validate,
    build_classical,
    classify_boundary,
    classify_xi0_boundary,
    restricted_roots,
    symmetric_decomposition,
    tau_endomorphism,
    verify_jacobi,
)
from .linalg import dot
from .names import parse_algebra_name
from .rootsys import build_root_system, highest_root

_EXC_CASES = {
    "e6_6": "e6(6)",
    "e7_7": "e7(7)",
    "e6_C": "e6-complex",
    "e7_C": "e7-complex",
}

# table rows for the two forms whose ambient algebras are never constructed
_REFERENCE_ROWS = {
    "e6_m26": {
        "algebra": "e6(-26)",
        "family": "A",
        "rank": 2,
        "multiplicities": [["2", 8]],
        "h": {"name": "f4(-20)", "dim": 52, "center_dim": 0, "killing": [16, 0, 36]},
    },
    "e7_m25": {
        "algebra": "e7(-25)",
        "family": "C",
        "rank": 3,
        "multiplicities": [["1/2", 8], ["1", 1]],
        "h": {
            "name": "e6(-26)+R",
            "dim": 79,
            "center_dim": 1,
            "killing": [26, 1, 52],
        },
    },
}


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


def _system_label(family: str, rank) -> str:
    # E6/E7 already carry their rank in the family token
    return family if family.startswith("E") else f"{family}{rank}"


def _parse_system_token(token: str):
    t = token.strip().upper()
    m = fullmatch(r"(BC|E6|E7|[ABCD])(\d*)", t)
    if not m:
        raise ValueError(
            f"cannot parse root-system token {token!r}; expected forms like "
            "A3, B4, BC2, D5, E6, E7"
        )
    family, digits = m.group(1), m.group(2)
    if family in ("E6", "E7"):
        rank = int(family[1])
        if digits and int(digits) != rank:
            raise ValueError(f"{family} has rank {rank}, not {digits}")
        return family, rank
    if not digits:
        raise ValueError(f"missing rank in root-system token {token!r}")
    return family, int(digits)


def _exceptional_algebra(kind: str):
    family, rank = ("E6", 6) if kind.startswith("e6") else ("E7", 7)
    if kind.endswith("_C"):
        return chevalley._realified(family, rank)
    return chevalley._chevalley(family, rank).realization


def _system_record(alg) -> dict:
    by_length: dict = {}
    for root, mult in restricted_roots(alg).multiplicities:
        length = dot(root, root)
        if by_length.setdefault(length, mult) != mult:
            raise AssertionError("multiplicity varies within one length class")
    return {
        "family": alg.datum.family,
        "rank": alg.datum.rank,
        "multiplicities": [[str(le), by_length[le]] for le in sorted(by_length)],
    }


def _component_record(comp) -> dict:
    fp = comp.stabilizer_fingerprint
    return {
        "rep": [str(c) for c in comp.representative],
        "orbit_size": comp.orbit_size,
        "symmetric": comp.symmetric,
        "totally_real": comp.symmetric,
        "h": {
            "name": comp.identified_name,
            "dim": fp.dim,
            "center_dim": fp.center_dim,
            "killing": list(fp.killing_signature),
        },
        "verification": "computed",
    }


def _reference_report(kind: str):
    row = _REFERENCE_ROWS[kind]
    rd = build_root_system(row["family"], row["rank"])
    dec = extreme_orbits(CrownPolytope(rd))
    flags = component_flags(rd)
    components = []
    for orb, flag in zip(dec.orbits, flags):
        components.append(
            {
                "rep": [str(c) for c in orb.representative],
                "orbit_size": orb.size,
                "symmetric": flag["symmetric"],
                "totally_real": flag["totally_real"],
                "h": dict(row["h"], killing=list(row["h"]["killing"])),
                "verification": "reference-only",
            }
        )
    report = {
        "algebra": row["algebra"],
        "system": {
            "family": row["family"],
            "rank": row["rank"],
            "multiplicities": [list(m) for m in row["multiplicities"]],
        },
        "components": components,
    }
    return report, 0


def _classify_report(name: str, xi0: bool):
    parsed = parse_algebra_name(name)
    canon = parsed.canonical()
    if parsed.kind in _REFERENCE_ROWS:
        if xi0:
            raise ValueError(f"{canon} has no computed flat-boundary analysis")
        return _reference_report(parsed.kind)
    if parsed.kind in _EXC_CASES:
        if xi0:
            raise ValueError("--xi0 analysis covers so(p,q) and so(n,C) only")
        comps = exceptional_boundary(_EXC_CASES[parsed.kind])
        alg = _exceptional_algebra(parsed.kind)
    else:
        alg = build_classical(canon)
        comps = classify_xi0_boundary(canon) if xi0 else classify_boundary(canon)
    report = {
        "algebra": canon,
        "system": _system_record(alg),
        "components": [_component_record(c) for c in comps],
    }
    rc = 1 if any(c.identified_name == "unidentified" for c in comps) else 0
    return report, rc


def _jordan_report(kind: str, n: int):
    name = f"Symm({n},R)" if kind == "symm" else f"Herm({n},C)"
    V = build_jordan(name)
    if n >= 2:
        dec = xi0_extreme_orbits(V)
        sizes = {
            sum(1 for c in o.representative if c > 0): o.size for o in dec.orbits
        }
    else:
        sizes = {0: 1, 1: 1}
    strata = []
    rc = 0
    for p in range(n + 1):
        z = frame_point(V, p)
        fp, found = stratum_stabilizer_algebra(V, p)
        if found == "unidentified":
            rc = 1
        strata.append(
            {
                "p": p,
                "rep": [str(z[i][i]) for i in range(n)],
                "det": str(jordan_det(V, z)),
                "orbit_size": sizes[p],
                "stabilizer": {
                    "name": found,
                    "dim": fp.dim,
                    "center_dim": fp.center_dim,
                    "killing": list(fp.killing_signature),
                },
            }
        )
    report = {
        "algebra": V.name,
        "system": {"family": "A", "rank": n - 1},
        "strata": strata,
    }
    return report, rc


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _render_classify_table(report: dict) -> str:
    sysrec = report["system"]
    mults = ", ".join(f"{le} -> {m}" for le, m in sysrec["multiplicities"])
    lines = [
        f"algebra: {report['algebra']}",
        f"system: {_system_label(sysrec['family'], sysrec['rank'])}",
        f"  multiplicity by squared root length: {mults}",
        "components:",
    ]
    for i, c in enumerate(report["components"], 1):
        h = c["h"]
        flag = "symmetric" if c["symmetric"] else "non-symmetric"
        killing = "({}, {}, {})".format(*h["killing"])
        lines.append(
            f"  [{i}] rep = ({', '.join(c['rep'])})  orbit size = {c['orbit_size']}  {flag}"
        )
        lines.append(
            f"      h = {h['name']}  dim {h['dim']}  center {h['center_dim']}  "
            f"killing {killing}  [{c['verification']}]"
        )
    return "\n".join(lines) + "\n"


def _render_jordan_table(report: dict) -> str:
    lines = [
        f"algebra: {report['algebra']}",
        f"system: A{report['system']['rank']} carrier",
        "strata:",
    ]
    for s in report["strata"]:
        st = s["stabilizer"]
        killing = "({}, {}, {})".format(*st["killing"])
        lines.append(
            f"  p = {s['p']}: rep diag ({', '.join(s['rep'])})  det = {s['det']}  "
            f"orbit size = {s['orbit_size']}"
        )
        lines.append(
            f"      stabilizer = {st['name']}  dim {st['dim']}  killing {killing}"
        )
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_roots(args) -> int:
    family, rank = _parse_system_token(args.system)
    rd = build_root_system(family, rank)
    _, coeffs = highest_root(rd)
    lines = [
        f"system: {_system_label(family, rank)}",
        f"ambient dimension: {rd.ambient_dim}",
        f"roots: {len(rd.roots)} ({len(rd.positive)} positive)",
        f"weyl order: {rd.weyl_order}",
        f"highest root coefficients: {' '.join(str(c) for c in coeffs)}",
        "simple roots:",
    ]
    for i, a in enumerate(rd.simple, 1):
        lines.append(f"  a{i} = {_fmt_vec(a)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_extremes(args) -> int:
    family, rank = _parse_system_token(args.system)
    rd = build_root_system(family, rank)
    dec = extreme_orbits(CrownPolytope(rd))
    lines = [f"system: {_system_label(family, rank)}", f"extreme orbits: {len(dec.orbits)}"]
    for i, orb in enumerate(dec.orbits, 1):
        lines.append(f"  [{i}] rep = {_fmt_vec(orb.representative)}  size = {orb.size}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_classify(args) -> int:
    report, rc = _classify_report(args.algebra, args.xi0)
    if args.format == "json":
        _emit(render_json(report), args.out)
    else:
        _emit(_render_classify_table(report), args.out)
    return rc


def cmd_jordan(args) -> int:
    report, rc = _jordan_report(args.kind, args.n)
    if args.format == "json":
        _emit(render_json(report), args.out)
    else:
        _emit(_render_jordan_table(report), args.out)
    return rc


def cmd_verify(args) -> int:
    parsed = parse_algebra_name(args.algebra)
    canon = parsed.canonical()
    if parsed.kind in _REFERENCE_ROWS:
        sys.stdout.write(f"{canon}: reference-only entry, no realization to verify\n")
        return 0
    if parsed.kind in _EXC_CASES:
        alg = _exceptional_algebra(parsed.kind)
        comps = exceptional_boundary(_EXC_CASES[parsed.kind])
    else:
        alg = build_classical(canon)
        comps = classify_boundary(canon)
    lines = [f"algebra: {canon} (dim {alg.dim})"]
    verify_jacobi(alg)
    lines.append("jacobi identity on all basis triples: ok")
    _validate(alg)
    lines.append("theta involution and bracket compatibility: ok")
    rr = restricted_roots(alg)
    lines.append(
        f"restricted system {_system_label(alg.datum.family, alg.datum.rank)}: ok "
        f"(zero space dim {rr.zero_dim})"
    )
    rc = 0
    for i, c in enumerate(comps, 1):
        fp = c.stabilizer_fingerprint
        if c.symmetric:
            tau = tau_endomorphism(alg, c.representative)
            if not tau.is_involution:
                lines.append(f"component {i}: tau^2 != id, FAILED")
                rc = 1
                continue
            h, q = symmetric_decomposition(alg, c.representative)
            if len(h) + len(q) != alg.dim or len(h) != fp.dim:
                lines.append(f"component {i}: h(+)q split mismatch, FAILED")
                rc = 1
                continue
            detail = "tau^2 = id, h(+)q ok"
        else:
            detail = "non-symmetric (half-integral spectrum)"
        lines.append(
            f"component {i}: h = {c.identified_name} (dim {fp.dim}), {detail}"
        )
        if c.identified_name == "unidentified":
            rc = 1
    lines.append("status: " + ("ok" if rc == 0 else "FAILED"))
    sys.stdout.write("\n".join(lines) + "\n")
    return rc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crownorbits",
        description="Exact classification of crown-domain boundary orbits.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="summarize a restricted root system")
    r.add_argument("system", help="family token, e.g. A3, B4, BC2, E7")
    r.set_defaults(func=cmd_roots)

    e = sub.add_parser("extremes", help="extreme orbits of the crown polytope")
    e.add_argument("system", help="family token, e.g. A3, B4, BC2, E7")
    e.set_defaults(func=cmd_extremes)

    c = sub.add_parser("classify", help="classify distinguished boundary orbits")
    c.add_argument("algebra", help="e.g. sl(3,R), so(3,5), sp(2,C), e6(6)")
    c.add_argument("--xi0", action="store_true",
                   help="flat-boundary analysis (so(p,q) and so(n,C) only)")
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.add_argument("--out", metavar="PATH", help="write the report to a file")
    c.set_defaults(func=cmd_classify)

    j = sub.add_parser("jordan", help="signature strata of a matrix Jordan algebra")
    j.add_argument("kind", choices=("symm", "herm"))
    j.add_argument("n", type=int, help="rank")
    j.add_argument("--format", choices=("table", "json"), default="table")
    j.add_argument("--out", metavar="PATH", help="write the report to a file")
    j.set_defaults(func=cmd_jordan)

    v = sub.add_parser("verify", help="run the invariant suite for one algebra")
    v.add_argument("algebra")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
