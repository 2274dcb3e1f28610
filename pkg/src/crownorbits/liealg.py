"""Exact matrix realizations of the classical real Lie algebras.

Each algebra is built as a real Lie algebra of complex (Gaussian-rational)
matrices with Cartan involution theta(X) = -X^dagger, a chosen split abelian
subspace with a chart onto the abstract root-system ambient space, and exact
structure constants.  On top of that sit the restricted-root verification, the
boundary endomorphism tau (eigenspace phase scaling of exp(2i ad Y) composed
with theta), stabilizer subalgebras h = g^tau, and fingerprint-based
identification of the stabilizers against reference real forms.

Quaternionic algebras use the standard 2x2 complex block embedding of H; the
per-entry blocks sit at consecutive row/column pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Sequence

from .causality import lookup_causal_pairs
from .crown import CrownPolytope, extreme_orbits, xi0_polytope
from .linalg import (
    GaussianRational,
    SpanSolver,
    Vector,
    dot,
    inertia,
    nullspace,
    solve_square,
    transpose,
    vec,
)
from .names import ParsedName, join_sum, parse_algebra_name, so_name
from .rootsys import RootDatum, build_root_system
from .weyl import dominant_representative, orbit

GaussianScalar = GaussianRational
_GI = GaussianRational
_ZERO = Q(0)
_ONE = Q(1)

# ---------------------------------------------------------------------------
# sparse Gaussian matrices (dict keyed by (row, col))


def _sp_mul(a: dict, b: dict) -> dict:
    by_row: dict[int, list] = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out: dict = {}
    for (r, c), va in a.items():
        for c2, vb in by_row.get(c, ()):
            key = (r, c2)
            prod = va * vb
            cur = out.get(key)
            out[key] = prod if cur is None else cur + prod
    return {k: v for k, v in out.items() if v}


def _sp_commutator(a: dict, b: dict) -> dict:
    out = dict(_sp_mul(a, b))
    for key, v in _sp_mul(b, a).items():
        cur = out.get(key)
        out[key] = -v if cur is None else cur - v
    return {k: v for k, v in out.items() if v}


def _sp_neg_dagger(a: dict) -> dict:
    return {(c, r): -v.conjugate() for (r, c), v in a.items()}


def _sp_flatten(a: dict, n: int) -> Vector:
    out = [_ZERO] * (2 * n * n)
    for (r, c), v in a.items():
        out[r * n + c] = v.re
        out[n * n + r * n + c] = v.im
    return tuple(out)


def _dense(a: dict, n: int):
    return tuple(
        tuple(a.get((r, c), _GI(0)) for c in range(n)) for r in range(n)
    )


def _e(r: int, c: int, v=1) -> dict:
    return {(r, c): _GI(v)}


def _madd(*mats: dict) -> dict:
    out: dict = {}
    for m in mats:
        for k, v in m.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
    return {k: v for k, v in out.items() if v}


# quaternion units as 2x2 complex blocks: q = a + bi + cj + dk
_QUNITS = {
    "1": ((_GI(1), _GI(0)), (_GI(0), _GI(1))),
    "i": ((_GI(0, 1), _GI(0)), (_GI(0), _GI(0, -1))),
    "j": ((_GI(0), _GI(1)), (_GI(-1), _GI(0))),
    "k": ((_GI(0), _GI(0, 1)), (_GI(0, 1), _GI(0))),
}


def _qblock(k: int, l: int, unit: str, sign=1) -> dict:
    blk = _QUNITS[unit]
    out = {}
    for r in range(2):
        for c in range(2):
            v = blk[r][c]
            if v:
                out[(2 * k + r, 2 * l + c)] = v * sign if sign != 1 else v
    return out


def _qconj_block(k: int, l: int, unit: str, sign=1) -> dict:
    s = sign if unit == "1" else -sign
    return _qblock(k, l, unit, s)


# ---------------------------------------------------------------------------
# realization type


@dataclass(eq=False)
class LieAlgebraRealization:
    """A real Lie algebra with exact structure constants and Cartan data.

    bracket maps ordered basis pairs (i, j), i < j, to sparse coordinate
    rows of [b_i, b_j]; theta[i] holds the coordinates of theta(b_i);
    cartan_subspace lists coordinate vectors spanning the split subspace,
    and chart[j] is the root-ambient image of the j-th generator.
    """

    name: str
    basis: tuple | None
    bracket: dict
    theta: tuple
    cartan_subspace: tuple
    chart: tuple
    datum: RootDatum | None
    _table: list | None = field(default=None, repr=False)
    _weights: dict | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.theta)


def _pair_table(alg: LieAlgebraRealization) -> list:
    """Full antisymmetrized bracket table: table[i][j] = {k: coeff}."""
    if alg._table is None:
        d = alg.dim
        table: list[dict] = [dict() for _ in range(d)]
        for (i, j), entries in alg.bracket.items():
            table[i][j] = {k: c for k, c in entries}
            table[j][i] = {k: -c for k, c in entries}
        alg._table = table
    return alg._table


def bracket_vector(alg: LieAlgebraRealization, x: Sequence[Q], y: Sequence[Q]) -> dict:
    """Sparse coordinates of [x, y] for coordinate vectors x, y."""
    table = _pair_table(alg)
    xs = [(i, c) for i, c in enumerate(x) if c]
    ys = [(j, c) for j, c in enumerate(y) if c]
    out: dict[int, Q] = {}
    for i, ci in xs:
        row = table[i]
        for j, cj in ys:
            ent = row.get(j)
            if not ent:
                continue
            f = ci * cj
            for k, c in ent.items():
                cur = out.get(k)
                val = f * c if cur is None else cur + f * c
                if val:
                    out[k] = val
                elif cur is not None:
                    del out[k]
    return out


def theta_vector(alg: LieAlgebraRealization, x) -> dict:
    """Sparse coordinates of theta(x); accepts a sparse dict or a sequence."""
    items = x.items() if isinstance(x, dict) else (
        (i, c) for i, c in enumerate(x) if c
    )
    out: dict[int, Q] = {}
    for i, ci in items:
        for k, c in enumerate(alg.theta[i]):
            if c:
                cur = out.get(k)
                val = ci * c if cur is None else cur + ci * c
                if val:
                    out[k] = val
                elif cur is not None:
                    del out[k]
    return out


def _sparse_to_vec(d: int, sp: dict) -> Vector:
    out = [_ZERO] * d
    for k, v in sp.items():
        out[k] = v
    return tuple(out)


def verify_jacobi(alg: LieAlgebraRealization) -> None:
    """Exact Jacobi check over every basis triple; raises on any defect."""
    table = _pair_table(alg)
    d = alg.dim
    for i in range(d):
        ti = table[i]
        for j in range(i + 1, d):
            cij = ti.get(j)
            tj = table[j]
            for k in range(j + 1, d):
                acc: dict[int, Q] = {}
                for src, ent in (
                    (i, tj.get(k)),
                    (j, table[k].get(i)),
                    (k, cij),
                ):
                    if not ent:
                        continue
                    ts = table[src]
                    for m, c in ent.items():
                        inner = ts.get(m)
                        if not inner:
                            continue
                        for t, c2 in inner.items():
                            cur = acc.get(t)
                            val = c * c2 if cur is None else cur + c * c2
                            if val:
                                acc[t] = val
                            elif cur is not None:
                                del acc[t]
                if acc:
                    raise ValueError(
                        f"{alg.name}: Jacobi defect at basis triple ({i},{j},{k})"
                    )


# ---------------------------------------------------------------------------
# assembly and validation


def _assemble(name, mats, msize, cartan_indices, datum, chart,
              keep_matrices=True) -> LieAlgebraRealization:
    d = len(mats)
    flat = [_sp_flatten(m, msize) for m in mats]
    solver = SpanSolver(flat)
    bracket = {}
    for i in range(d):
        for j in range(i + 1, d):
            cm = _sp_commutator(mats[i], mats[j])
            co = solver.coords(_sp_flatten(cm, msize))
            if co is None:
                raise ValueError(f"{name}: bracket [{i},{j}] left the basis span")
            ent = tuple((k, c) for k, c in enumerate(co) if c)
            if ent:
                bracket[(i, j)] = ent
    theta_rows = []
    for m in mats:
        co = solver.coords(_sp_flatten(_sp_neg_dagger(m), msize))
        if co is None:
            raise ValueError(f"{name}: theta left the basis span")
        theta_rows.append(co)
    cartan = tuple(
        tuple(_ONE if t == idx else _ZERO for t in range(d)) for idx in cartan_indices
    )
    alg = LieAlgebraRealization(
        name=name,
        basis=tuple(_dense(m, msize) for m in mats) if keep_matrices else None,
        bracket=bracket,
        theta=tuple(theta_rows),
        cartan_subspace=cartan,
        chart=tuple(vec(c) for c in chart),
        datum=datum,
    )
    _validate(alg)
    return alg


def _validate(alg: LieAlgebraRealization) -> None:
    d = alg.dim
    # theta is an involution
    for i in range(d):
        sq = theta_vector(alg, alg.theta[i])
        expect = {i: _ONE}
        if sq != expect:
            raise ValueError(f"{alg.name}: theta^2 != id at basis index {i}")
    # theta preserves the bracket
    for (i, j), entries in alg.bracket.items():
        lhs = theta_vector(alg, dict(entries))
        rhs = bracket_vector(
            alg, alg.theta[i], alg.theta[j]
        )
        if lhs != rhs:
            raise ValueError(f"{alg.name}: theta breaks bracket at ({i},{j})")
    # split subspace: abelian and inside p (theta = -1)
    for a in alg.cartan_subspace:
        tv = theta_vector(alg, a)
        if _sparse_to_vec(d, tv) != tuple(-c for c in a):
            raise ValueError(f"{alg.name}: cartan generator not in p")
        for b in alg.cartan_subspace:
            if bracket_vector(alg, a, b):
                raise ValueError(f"{alg.name}: cartan subspace not abelian")
    if alg.datum is not None and alg.chart:
        if len(alg.chart) != len(alg.cartan_subspace):
            raise ValueError(f"{alg.name}: chart/cartan length mismatch")
        if any(len(c) != alg.datum.ambient_dim for c in alg.chart):
            raise ValueError(f"{alg.name}: chart ambient dimension mismatch")


# ---------------------------------------------------------------------------
# builders

_MAX_N = 8
_MAX_PQ = 10


def _range_error(name: str):
    return ValueError(f"{name}: parameters out of supported range")


def _a_chart(n: int) -> list:
    return [
        [1 if t == j else (-1 if t == j + 1 else 0) for t in range(n)]
        for j in range(n - 1)
    ]


def _build_sl_R(n: int):
    if not 2 <= n <= _MAX_N:
        raise _range_error(f"sl({n},R)")
    mats = [_madd(_e(j, j), _e(j + 1, j + 1, -1)) for j in range(n - 1)]
    cartan_idx = list(range(n - 1))
    mats += [_e(i, j) for i in range(n) for j in range(n) if i != j]
    return mats, n, cartan_idx, build_root_system("A", n - 1), _a_chart(n)


def _build_sl_C(n: int):
    if not 2 <= n <= _MAX_N:
        raise _range_error(f"sl({n},C)")
    real = [_madd(_e(j, j), _e(j + 1, j + 1, -1)) for j in range(n - 1)]
    real += [_e(i, j) for i in range(n) for j in range(n) if i != j]
    mats = list(real)
    cartan_idx = list(range(n - 1))
    mats += [{k: _GI(0, 1) * v for k, v in m.items()} for m in real]
    return mats, n, cartan_idx, build_root_system("A", n - 1), _a_chart(n)


def _build_sl_H(n: int):
    if not 2 <= n <= _MAX_N // 2 + 1:
        raise _range_error(f"sl({n},H)")
    mats = [
        _madd(_qblock(j, j, "1"), _qblock(j + 1, j + 1, "1", -1))
        for j in range(n - 1)
    ]
    cartan_idx = list(range(n - 1))
    for k in range(n):
        for u in ("i", "j", "k"):
            mats.append(_qblock(k, k, u))
    for k in range(n):
        for l in range(n):
            if k != l:
                for u in ("1", "i", "j", "k"):
                    mats.append(_qblock(k, l, u))
    return mats, 2 * n, cartan_idx, build_root_system("A", n - 1), _a_chart(n)


def _build_so_pq(p: int, q: int):
    p, q = sorted((p, q))
    n = p + q
    name = so_name(p, q)
    if p < 1 or n > _MAX_PQ or n < 3 or (p, q) == (2, 2):
        raise _range_error(f"so({p},{q})")
    mats = []
    cartan_idx = []
    for j in range(1, p + 1):
        cartan_idx.append(len(mats))
        mats.append(_madd(_e(j - 1, n - j), _e(n - j, j - 1)))
    for i in range(p):
        for j in range(i + 1, p):
            mats.append(_madd(_e(i, j), _e(j, i, -1)))
    for i in range(p, n):
        for j in range(i + 1, n):
            mats.append(_madd(_e(i, j), _e(j, i, -1)))
    for i in range(p):
        for k in range(p, n):
            if (i, k) == (i, n - 1 - i):
                continue  # already present as a cartan generator
            mats.append(_madd(_e(i, k), _e(k, i)))
    if p == q:
        datum = build_root_system("D", p)
    else:
        datum = build_root_system("B", p)
    chart = [[1 if t == j else 0 for t in range(p)] for j in range(p)]
    return mats, n, cartan_idx, datum, chart, name


def _build_so_C(n: int):
    if not 3 <= n <= _MAX_N or n == 4:
        raise _range_error(f"so({n},C)")
    m = n // 2
    real = [
        _madd(_e(i, j), _e(j, i, -1)) for i in range(n) for j in range(i + 1, n)
    ]
    mats = []
    cartan_idx = []
    imag = [{k: _GI(0, 1) * v for k, v in mm.items()} for mm in real]
    for k in range(1, m + 1):
        cartan_idx.append(len(mats))
        # i(E_{2k-1,2k} - E_{2k,2k-1}) in 0-based rows 2k-2, 2k-1
        mats.append(
            _madd(
                {(2 * k - 2, 2 * k - 1): _GI(0, 1)},
                {(2 * k - 1, 2 * k - 2): _GI(0, -1)},
            )
        )
    used = {(2 * k - 2, 2 * k - 1) for k in range(1, m + 1)}
    mats += real
    for mm in imag:
        key = next(iter(k for k in mm if k[0] < k[1]))
        if key in used:
            continue
        mats.append(mm)
    datum = build_root_system("D" if n % 2 == 0 else "B", m)
    chart = [[1 if t == j else 0 for t in range(m)] for j in range(m)]
    return mats, n, cartan_idx, datum, chart


def _build_su_pq(p: int, q: int):
    p, q = sorted((p, q))
    n = p + q
    if p < 1 or n > _MAX_PQ or n < 3:
        raise _range_error(f"su({p},{q})")
    mats = []
    cartan_idx = []
    for j in range(1, p + 1):
        cartan_idx.append(len(mats))
        mats.append(_madd(_e(j - 1, n - j), _e(n - j, j - 1)))
    # compact part: s(u(p) + u(q))
    for blk in ((0, p), (p, n)):
        lo, hi = blk
        for i in range(lo, hi):
            for j in range(i + 1, hi):
                mats.append(_madd(_e(i, j), _e(j, i, -1)))
                mats.append({(i, j): _GI(0, 1), (j, i): _GI(0, 1)})
        for j in range(lo, hi - 1):
            mats.append({(j, j): _GI(0, 1), (j + 1, j + 1): _GI(0, -1)})
    mats.append(
        _madd(
            *[{(j, j): _GI(0, q)} for j in range(p)],
            *[{(j, j): _GI(0, -p)} for j in range(p, n)],
        )
    )
    # off-diagonal p-part
    for i in range(p):
        for k in range(p, n):
            if k != n - 1 - i:
                mats.append(_madd(_e(i, k), _e(k, i)))
            mats.append({(i, k): _GI(0, 1), (k, i): _GI(0, -1)})
    if p == q:
        datum = build_root_system("C", p)
        chart = [[2 if t == j else 0 for t in range(p)] for j in range(p)]
    else:
        datum = build_root_system("BC", p)
        chart = [[1 if t == j else 0 for t in range(p)] for j in range(p)]
    return mats, n, cartan_idx, datum, chart


def _build_sp_R(n: int):
    if not 1 <= n <= _MAX_N // 2 + 1:
        raise _range_error(f"sp({n},R)")
    mats = []
    cartan_idx = []
    for j in range(n):
        cartan_idx.append(len(mats))
        mats.append(_madd(_e(j, j), _e(n + j, n + j, -1)))
    for a in range(n):
        for b in range(n):
            if a != b:
                mats.append(_madd(_e(a, b), _e(n + b, n + a, -1)))
    for a in range(n):
        for b in range(a, n):
            if a == b:
                mats.append(_e(a, n + a))
                mats.append(_e(n + a, a))
            else:
                mats.append(_madd(_e(a, n + b), _e(b, n + a)))
                mats.append(_madd(_e(n + a, b), _e(n + b, a)))
    datum = build_root_system("C", n)
    chart = [[2 if t == j else 0 for t in range(n)] for j in range(n)]
    return mats, 2 * n, cartan_idx, datum, chart


def _build_sp_C(n: int):
    real_mats, msize, cartan_idx, datum, chart = _build_sp_R(n)
    if 2 * n > _MAX_N:
        raise _range_error(f"sp({n},C)")
    mats = list(real_mats)
    mats += [{k: _GI(0, 1) * v for k, v in m.items()} for m in real_mats]
    return mats, msize, cartan_idx, datum, chart


def _build_sp_pq(p: int, q: int):
    p, q = sorted((p, q))
    n = p + q
    if p < 1 or n > _MAX_PQ // 2 or n < 2:
        raise _range_error(f"sp({p},{q})")
    mats = []
    cartan_idx = []
    for j in range(1, p + 1):
        cartan_idx.append(len(mats))
        mats.append(_madd(_qblock(j - 1, n - j, "1"), _qblock(n - j, j - 1, "1")))
    for k in range(n):
        for u in ("i", "j", "k"):
            mats.append(_qblock(k, k, u))
    sgn = lambda k: 1 if k < p else -1
    for k in range(n):
        for l in range(k + 1, n):
            cross = sgn(k) != sgn(l)
            for u in ("1", "i", "j", "k"):
                if cross and (k, l) == (k, n - 1 - k) and u == "1":
                    continue  # cartan generator
                mats.append(
                    _madd(_qblock(k, l, u), _qconj_block(l, k, u, 1 if cross else -1))
                )
    if p == q:
        datum = build_root_system("C", p)
        chart = [[2 if t == j else 0 for t in range(p)] for j in range(p)]
    else:
        datum = build_root_system("BC", p)
        chart = [[1 if t == j else 0 for t in range(p)] for j in range(p)]
    return mats, 2 * n, cartan_idx, datum, chart


def _build_so_star(two_n: int):
    if two_n % 2 != 0:
        raise _range_error(f"so*({two_n})")
    n = two_n // 2
    if not 3 <= n <= _MAX_N:
        raise _range_error(f"so*({two_n})")
    m = n // 2
    mats = []
    cartan_idx = []
    for k in range(1, m + 1):
        cartan_idx.append(len(mats))
        a, b = 2 * k - 2, 2 * k - 1
        mats.append(
            _madd(_e(a, n + b), _e(b, n + a, -1), _e(n + a, b, -1), _e(n + b, a))
        )
    # k-part u(n): A antihermitian, embedded as diag(A, -A^T)
    for a in range(n):
        for b in range(a + 1, n):
            mats.append(_madd(_e(a, b), _e(b, a, -1), _e(n + b, n + a, -1), _e(n + a, n + b)))
            mats.append(
                {
                    (a, b): _GI(0, 1),
                    (b, a): _GI(0, 1),
                    (n + a, n + b): _GI(0, -1),
                    (n + b, n + a): _GI(0, -1),
                }
            )
    for a in range(n):
        mats.append({(a, a): _GI(0, 1), (n + a, n + a): _GI(0, -1)})
    # p-part: B complex antisymmetric in the off-diagonal slot
    cartan_pairs = {(2 * k - 2, 2 * k - 1) for k in range(1, m + 1)}
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in cartan_pairs:
                mats.append(
                    _madd(_e(a, n + b), _e(b, n + a, -1), _e(n + a, b, -1), _e(n + b, a))
                )
            mats.append(
                {
                    (a, n + b): _GI(0, 1),
                    (b, n + a): _GI(0, -1),
                    (n + a, b): _GI(0, 1),
                    (n + b, a): _GI(0, -1),
                }
            )
    if n % 2 == 0:
        datum = build_root_system("C", m)
        chart = [[2 if t == j else 0 for t in range(m)] for j in range(m)]
    else:
        datum = build_root_system("BC", m)
        chart = [[1 if t == j else 0 for t in range(m)] for j in range(m)]
    return mats, 2 * n, cartan_idx, datum, chart


_ALGEBRA_CACHE: dict[str, LieAlgebraRealization] = {}


def build_classical(name: str) -> LieAlgebraRealization:
    """Exact realization of a classical real Lie algebra by canonical name."""
    parsed = parse_algebra_name(name)
    kind, params = parsed.kind, parsed.params
    if kind.startswith("e"):
        raise ValueError(
            f"{name}: exceptional algebras are built by the chevalley module"
        )
    if kind == "so_pq":
        p, q = sorted(params)
        canon = f"so({p},{q})"
    elif kind == "sp_pq":
        p, q = sorted(params)
        canon = f"sp({p},{q})"
    elif kind == "su_pq":
        p, q = sorted(params)
        canon = f"su({p},{q})"
    else:
        canon = parsed.canonical()
    cached = _ALGEBRA_CACHE.get(canon)
    if cached is not None:
        return cached
    if kind == "sl_R":
        mats, msize, idx, datum, chart = _build_sl_R(params[0])
    elif kind == "sl_C":
        mats, msize, idx, datum, chart = _build_sl_C(params[0])
    elif kind == "sl_H":
        mats, msize, idx, datum, chart = _build_sl_H(params[0])
    elif kind == "so_pq":
        mats, msize, idx, datum, chart, canon = _build_so_pq(*params)
    elif kind == "so_C":
        mats, msize, idx, datum, chart = _build_so_C(params[0])
    elif kind == "su_pq":
        mats, msize, idx, datum, chart = _build_su_pq(*params)
    elif kind == "sp_R":
        mats, msize, idx, datum, chart = _build_sp_R(params[0])
    elif kind == "sp_C":
        mats, msize, idx, datum, chart = _build_sp_C(params[0])
    elif kind == "sp_pq":
        mats, msize, idx, datum, chart = _build_sp_pq(*params)
    elif kind == "so_star":
        mats, msize, idx, datum, chart = _build_so_star(params[0])
    else:
        raise ValueError(f"unknown algebra name {name!r}")
    alg = _assemble(canon, mats, msize, idx, datum, chart)
    _ALGEBRA_CACHE[canon] = alg
    return alg


# ---------------------------------------------------------------------------
# restricted roots


@dataclass(frozen=True)
class RestrictedRoots:
    datum: RootDatum
    multiplicities: tuple  # ((root, mult), ...) aligned with datum.roots
    zero_dim: int  # dim of the joint ad-kernel (m + a)

    def as_dict(self) -> dict:
        return {r: m for r, m in self.multiplicities}


def _ad_columns(alg: LieAlgebraRealization, x: Sequence[Q]) -> list[dict]:
    """ad(x) as a list of sparse columns: col[k] = coords of [x, b_k]."""
    d = alg.dim
    table = _pair_table(alg)
    xs = [(i, c) for i, c in enumerate(x) if c]
    cols = []
    for k in range(d):
        acc: dict[int, Q] = {}
        for i, ci in xs:
            ent = table[i].get(k)
            if not ent:
                continue
            for t, c in ent.items():
                cur = acc.get(t)
                val = ci * c if cur is None else cur + ci * c
                if val:
                    acc[t] = val
                elif cur is not None:
                    del acc[t]
        cols.append(acc)
    return cols


def _apply_cols(cols: list[dict], v: Sequence[Q], d: int) -> list[Q]:
    out = [_ZERO] * d
    for k, c in enumerate(v):
        if c:
            for t, val in cols[k].items():
                out[t] += c * val
    return out


def weight_spaces(alg: LieAlgebraRealization) -> dict:
    """Joint ad-eigenspace decomposition over the split subspace.

    Returns {weight tuple: tuple of coordinate vectors}; the weight of a
    root alpha is (<alpha, chart_1>, ..., <alpha, chart_r>).  Cached on the
    realization.
    """
    if alg._weights is not None:
        return alg._weights
    if alg.datum is None:
        raise ValueError(f"{alg.name}: no root datum attached")
    d = alg.dim
    r = len(alg.cartan_subspace)
    root_weights = {
        tuple(dot(a, col) for col in alg.chart): a for a in alg.datum.roots
    }
    ad_cols = [_ad_columns(alg, a) for a in alg.cartan_subspace]
    pieces: list[tuple[tuple, list]] = [
        ((), [tuple(_ONE if t == k else _ZERO for t in range(d)) for k in range(d)])
    ]
    for j in range(r):
        cols = ad_cols[j]
        diagonal = all(set(cols[k]) <= {k} for k in range(d))
        values = sorted({w[j] for w in root_weights} | {_ZERO})
        new_pieces = []
        for prefix, vectors in pieces:
            if diagonal:
                buckets: dict[Q, list] = {}
                for v in vectors:
                    support = [k for k, c in enumerate(v) if c]
                    lam = cols[support[0]].get(support[0], _ZERO)
                    if any(cols[k].get(k, _ZERO) != lam for k in support):
                        raise ValueError(
                            f"{alg.name}: non-diagonal action on a diagonal axis"
                        )
                    buckets.setdefault(lam, []).append(v)
                for lam, vs in buckets.items():
                    if lam not in values:
                        raise ValueError(
                            f"{alg.name}: unexpected ad eigenvalue {lam} on axis {j}"
                        )
                    new_pieces.append((prefix + (lam,), vs))
                continue
            total = 0
            for lam in values:
                rows = []
                for v in vectors:
                    img = _apply_cols(cols, v, d)
                    rows.append([img[t] - lam * v[t] for t in range(d)])
                combos = nullspace(transpose(rows))
                if not combos:
                    continue
                vs = []
                for c in combos:
                    acc = [_ZERO] * d
                    for t, ct in enumerate(c):
                        if ct:
                            for u in range(d):
                                if vectors[t][u]:
                                    acc[u] += ct * vectors[t][u]
                    vs.append(tuple(acc))
                total += len(vs)
                new_pieces.append((prefix + (lam,), vs))
            if total != len(vectors):
                raise ValueError(
                    f"{alg.name}: ad not diagonalizable over the expected "
                    f"eigenvalues on axis {j} (chart mismatch)"
                )
        pieces = new_pieces
    out: dict[tuple, tuple] = {}
    for w, vectors in pieces:
        out.setdefault(w, ())
        out[w] = out[w] + tuple(vectors)
    zero = tuple(_ZERO for _ in range(r))
    for w in out:
        if w != zero and w not in root_weights:
            raise ValueError(
                f"{alg.name}: weight {w} does not match any restricted root "
                f"(chart mismatch)"
            )
    alg._weights = out
    return out


def restricted_roots(alg: LieAlgebraRealization) -> RestrictedRoots:
    """Restricted-root multiplicities, verified against the declared datum."""
    spaces = weight_spaces(alg)
    r = len(alg.cartan_subspace)
    zero = tuple(_ZERO for _ in range(r))
    mults = []
    for a in alg.datum.roots:
        w = tuple(dot(a, col) for col in alg.chart)
        vs = spaces.get(w, ())
        if not vs:
            raise ValueError(f"{alg.name}: restricted root {a} has no eigenspace")
        mults.append((a, len(vs)))
    zero_dim = len(spaces.get(zero, ()))
    if zero_dim + sum(m for _, m in mults) != alg.dim:
        raise ValueError(f"{alg.name}: eigenspace dimensions do not add up")
    if zero_dim < r:
        raise ValueError(f"{alg.name}: joint kernel smaller than the split subspace")
    return RestrictedRoots(alg.datum, tuple(mults), zero_dim)


# ---------------------------------------------------------------------------
# tau and stabilizers


def _chart_coefficients(alg: LieAlgebraRealization, Y: Sequence[Q]) -> Vector:
    """Coefficients t with sum_j t_j * chart_j = Y; rejects off-chart points."""
    r = len(alg.chart)
    gram = [[dot(ci, cj) for cj in alg.chart] for ci in alg.chart]
    rhs = [dot(ci, vec(Y)) for ci in alg.chart]
    t = solve_square(gram, rhs)
    if t is None:
        raise ValueError(f"{alg.name}: degenerate chart")
    recon = [_ZERO] * alg.datum.ambient_dim
    for j in range(r):
        if t[j]:
            for u, c in enumerate(alg.chart[j]):
                recon[u] += t[j] * c
    if tuple(recon) != tuple(vec(Y)):
        raise ValueError(f"{alg.name}: point {Y} is outside the split-subspace chart")
    return t


def _phase(s: Q) -> GaussianScalar:
    """e^{i pi s} for half-integral s."""
    twice = 2 * s
    if twice.denominator != 1:
        raise ValueError("unsupported spectrum")
    k = twice.numerator % 4
    return (_GI(1), _GI(0, 1), _GI(-1), _GI(0, -1))[k]


class TauEndomorphism:
    """The boundary endomorphism tau at a crown point.

    tau acts conjugate-linearly on the complexified coordinate span: first
    the (complexified) Cartan involution, then the eigenspace phase scaling
    that multiplies the ad(Y)-eigenspace of eigenvalue s by e^{i pi s}.
    Vectors are tuples of GaussianScalar coordinates in the realization
    basis; tau fixes exactly the stabilizer h inside the real points.
    """

    def __init__(self, alg: LieAlgebraRealization, point, blocks, spectrum):
        self.alg = alg
        self.point = tuple(point)
        self.blocks = blocks  # tuple of (s, tuple of real coordinate vectors)
        self.spectrum = spectrum
        self.is_involution = all(s.denominator == 1 for s in spectrum)
        self.order = 2 if self.is_involution else 4
        self._rows = [v for _, vs in blocks for v in vs]
        self._lazy_solver = None  # the Gram inversion is costly at high rank
        self._slices = []
        start = 0
        for s, vs in blocks:
            self._slices.append((s, start, start + len(vs)))
            start += len(vs)

    @property
    def _solver(self) -> SpanSolver:
        if self._lazy_solver is None:
            self._lazy_solver = SpanSolver(self._rows)
        return self._lazy_solver

    def apply(self, x) -> tuple:
        """tau(x) for a coordinate vector over GaussianScalar (or rationals)."""
        d = self.alg.dim
        tx_sp = theta_vector(self.alg, {
            i: c for i, c in enumerate(
                _GI(c) if not isinstance(c, _GI) else c for c in x
            ) if c
        })
        # theta was built real-linear; complex coordinates pass through
        tre = [_ZERO] * d
        tim = [_ZERO] * d
        for i, c in tx_sp.items():
            tre[i] = c.re
            tim[i] = c.im
        cre = self._solver.coords(tre)
        cim = self._solver.coords(tim)
        if cre is None or cim is None:
            raise ValueError(f"{self.alg.name}: vector outside the algebra span")
        out = [_GI(0)] * d
        rows = self._solver.basis
        for s, lo, hi in self._slices:
            ph = _phase(s)
            for t in range(lo, hi):
                # conjugate-linearity happens here: i-parts flip before the phase
                coeff = ph * _GI(cre[t], -cim[t])
                if coeff:
                    for u, c in enumerate(rows[t]):
                        if c:
                            out[u] = out[u] + coeff * c
        return tuple(out)


def _tau_blocks(alg: LieAlgebraRealization, Y):
    t = _chart_coefficients(alg, Y)
    spaces = weight_spaces(alg)
    groups: dict[Q, list] = {}
    for w, vs in spaces.items():
        s = sum((tj * wj for tj, wj in zip(t, w)), _ZERO)
        groups.setdefault(s, []).extend(vs)
    for s in groups:
        if (2 * s).denominator != 1:
            raise ValueError("unsupported spectrum")
    blocks = tuple(
        (s, tuple(groups[s])) for s in sorted(groups)
    )
    spectrum = tuple(sorted(groups))
    return blocks, spectrum


def tau_endomorphism(alg: LieAlgebraRealization, Y) -> TauEndomorphism:
    """tau = sigma . theta_C at the crown point Y (ambient coordinates)."""
    blocks, spectrum = _tau_blocks(alg, Y)
    return TauEndomorphism(alg, Y, blocks, spectrum)


def symmetric_decomposition(alg: LieAlgebraRealization, Y):
    """(h, q) bases for an involutive tau: the +1 and -1 eigenspaces in g.

    Raises for half-odd spectra, where tau is order four and g has no real
    eigenspace splitting.
    """
    blocks, spectrum = _tau_blocks(alg, Y)
    if any(s.denominator != 1 for s in spectrum):
        raise ValueError("unsupported spectrum: tau is not an involution here")
    d = alg.dim
    h: list = []
    q: list = []
    for s, vs in blocks:
        if s < 0:
            continue
        if s == 0:
            for target_sign, out in ((_ONE, h), (-_ONE, q)):
                rows = []
                for v in vs:
                    tv = _sparse_to_vec(d, theta_vector(alg, v))
                    rows.append([tv[u] - target_sign * v[u] for u in range(d)])
                for c in nullspace(transpose(rows)):
                    acc = [_ZERO] * d
                    for t, ct in enumerate(c):
                        if ct:
                            for u in range(d):
                                if vs[t][u]:
                                    acc[u] += ct * vs[t][u]
                    out.append(tuple(acc))
        else:
            sign = _ONE if s.numerator % 2 == 0 else -_ONE
            for v in vs:
                tv = _sparse_to_vec(d, theta_vector(alg, v))
                h.append(tuple(v[u] + sign * tv[u] for u in range(d)))
                q.append(tuple(v[u] - sign * tv[u] for u in range(d)))
    if len(h) + len(q) != d:
        raise ValueError(f"{alg.name}: eigenspace split misses the algebra")
    return tuple(h), tuple(q)


def stabilizer_subalgebra(alg: LieAlgebraRealization, Y, verify: bool = True):
    """Basis of h = {X in g : tau(X) = X}, as real coordinate vectors.

    Integer-spectrum pairs contribute x + e^{-i pi s} theta(x); half-odd
    pairs force the coefficient to be imaginary and contribute nothing to the
    real points.  The zero block contributes the theta-fixed vectors.
    """
    blocks, _ = _tau_blocks(alg, Y)
    d = alg.dim
    out = []
    for s, vs in blocks:
        if s < 0:
            continue
        if s == 0:
            rows = []
            for v in vs:
                tv = _sparse_to_vec(d, theta_vector(alg, v))
                rows.append([tv[u] - v[u] for u in range(d)])
            for c in nullspace(transpose(rows)):
                acc = [_ZERO] * d
                for t, ct in enumerate(c):
                    if ct:
                        for u in range(d):
                            if vs[t][u]:
                                acc[u] += ct * vs[t][u]
                out.append(tuple(acc))
        elif s.denominator == 1:
            sign = _ONE if s.numerator % 2 == 0 else -_ONE
            for v in vs:
                tv = _sparse_to_vec(d, theta_vector(alg, v))
                out.append(tuple(v[u] + sign * tv[u] for u in range(d)))
    if verify:
        solver = SpanSolver(out) if out else None
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                br = bracket_vector(alg, out[i], out[j])
                if br and solver.coords(_sparse_to_vec(d, br)) is None:
                    raise ValueError(f"{alg.name}: stabilizer not bracket-closed")
    return tuple(out)


# ---------------------------------------------------------------------------
# fingerprints


def killing_gram(alg: LieAlgebraRealization, vectors) -> list:
    """Gram matrix of the ambient Killing form on the given coordinate vectors."""
    cols = [_ad_columns(alg, v) for v in vectors]
    k = len(vectors)
    d = alg.dim
    out = [[_ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            s = _ZERO
            cj = cols[j]
            ci = cols[i]
            for t in range(d):
                col = cj[t]
                for u, v in col.items():
                    back = ci[u].get(t)
                    if back:
                        s += v * back
            out[i][j] = s
            out[j][i] = s
    return out


def theta_fixed_split(alg: LieAlgebraRealization):
    """(k, p) bases: the +1 and -1 eigenspaces of the Cartan involution."""
    d = alg.dim
    out = []
    for sign in (_ONE, -_ONE):
        rows = []
        for i in range(d):
            row = list(alg.theta[i])
            row[i] -= sign
            rows.append(row)
        out.append(tuple(nullspace(transpose(rows))))
    return out[0], out[1]


@dataclass(frozen=True)
class RealFormFingerprint:
    dim: int
    center_dim: int
    killing_signature: tuple
    derived_dim: int


def fingerprint(basis, alg: LieAlgebraRealization) -> RealFormFingerprint:
    """Isomorphism-invariant data of the subalgebra spanned by basis."""
    k = len(basis)
    if k == 0:
        return RealFormFingerprint(0, 0, (0, 0, 0), 0)
    d = alg.dim
    solver = SpanSolver(basis)
    cs: list[list[dict]] = [[{} for _ in range(k)] for _ in range(k)]
    derived_rows = []
    for i in range(k):
        for j in range(i + 1, k):
            br = bracket_vector(alg, basis[i], basis[j])
            co = solver.coords(_sparse_to_vec(d, br))
            if co is None:
                raise ValueError("fingerprint: basis is not closed under bracket")
            sp = {t: c for t, c in enumerate(co) if c}
            cs[i][j] = sp
            cs[j][i] = {t: -c for t, c in sp.items()}
            if sp:
                derived_rows.append(co)
    # center: x with [x, b_j] = 0 for all j
    rows = []
    for j in range(k):
        for m in range(k):
            row = [cs[i][j].get(m, _ZERO) for i in range(k)]
            if any(row):
                rows.append(row)
    center_dim = k - (len(rref_pivots(rows)) if rows else 0)
    derived_dim = len(rref_pivots(derived_rows)) if derived_rows else 0
    killing = [[_ZERO] * k for _ in range(k)]
    ad = [
        {m: cs[i][m] for m in range(k) if cs[i][m]} for i in range(k)
    ]
    for i in range(k):
        for j in range(i, k):
            s = _ZERO
            for m, row in ad[j].items():
                arow = ad[i]
                for l, v in row.items():
                    back = arow.get(l)
                    if back:
                        c = back.get(m)
                        if c:
                            s += v * c
            killing[i][j] = s
            killing[j][i] = s
    sig = inertia(killing)
    return RealFormFingerprint(k, center_dim, sig, derived_dim)


def rref_pivots(rows) -> list:
    from .linalg import rref

    if not rows:
        return []
    return rref(rows)[1]


_FULL_FP_CACHE: dict[str, RealFormFingerprint] = {}


def fingerprint_of_algebra(alg: LieAlgebraRealization) -> RealFormFingerprint:
    cached = _FULL_FP_CACHE.get(alg.name)
    if cached is not None:
        return cached
    d = alg.dim
    basis = [tuple(_ONE if t == k else _ZERO for t in range(d)) for k in range(d)]
    fp = fingerprint(basis, alg)
    _FULL_FP_CACHE[alg.name] = fp
    return fp


# ---------------------------------------------------------------------------
# identification


_R_FP = RealFormFingerprint(1, 1, (0, 1, 0), 0)

# populated by the chevalley module for the exceptional reference forms
EXTRA_FINGERPRINTS: dict[str, RealFormFingerprint] = {}


def _compact_fingerprint(kind: str, m: int) -> RealFormFingerprint:
    mats: list[dict] = []
    if kind == "so":
        for i in range(m):
            for j in range(i + 1, m):
                mats.append(_madd(_e(i, j), _e(j, i, -1)))
        msize = m
    elif kind == "su":
        for i in range(m):
            for j in range(i + 1, m):
                mats.append(_madd(_e(i, j), _e(j, i, -1)))
                mats.append({(i, j): _GI(0, 1), (j, i): _GI(0, 1)})
        for j in range(m - 1):
            mats.append({(j, j): _GI(0, 1), (j + 1, j + 1): _GI(0, -1)})
        msize = m
    elif kind == "sp":
        for k in range(m):
            for u in ("i", "j", "k"):
                mats.append(_qblock(k, k, u))
        for k in range(m):
            for l in range(k + 1, m):
                for u in ("1", "i", "j", "k"):
                    mats.append(_madd(_qblock(k, l, u), _qconj_block(l, k, u, -1)))
        msize = 2 * m
    else:
        raise ValueError(f"unknown compact family {kind}")
    if not mats:
        return RealFormFingerprint(0, 0, (0, 0, 0), 0)
    alg = _assemble(f"{kind}({m})", mats, msize, [], None, ())
    return fingerprint_of_algebra(alg)


def _fp_sum(a: RealFormFingerprint, b: RealFormFingerprint) -> RealFormFingerprint:
    return RealFormFingerprint(
        a.dim + b.dim,
        a.center_dim + b.center_dim,
        tuple(x + y for x, y in zip(a.killing_signature, b.killing_signature)),
        a.derived_dim + b.derived_dim,
    )


_CAND_FP_CACHE: dict[str, RealFormFingerprint] = {}


def _candidate_fingerprint(name: str) -> RealFormFingerprint:
    cached = _CAND_FP_CACHE.get(name)
    if cached is not None:
        return cached
    fp = _resolve_candidate(name)
    _CAND_FP_CACHE[name] = fp
    return fp


def _resolve_candidate(name: str) -> RealFormFingerprint:
    import re as _re

    if "+" in name:
        parts = name.split("+")
        fp = _candidate_fingerprint(parts[0])
        for part in parts[1:]:
            fp = _fp_sum(fp, _candidate_fingerprint(part))
        return fp
    if name == "R":
        return _R_FP
    if name in ("so(1,1)", "gl(1,R)", "so(2)", "u(1)", "so*(2)"):
        return _R_FP
    if name in EXTRA_FINGERPRINTS:
        return EXTRA_FINGERPRINTS[name]
    # low-rank coincidences outside the generic builders
    aliases = {
        "so(2,2)": "sl(2,R)+sl(2,R)",
        "so(4,C)": "sl(2,C)+sl(2,C)",
        "su(1,1)": "sl(2,R)",
        "so*(4)": "su(2)+sl(2,R)",
    }
    if name in aliases:
        return _candidate_fingerprint(aliases[name])
    m = _re.fullmatch(r"gl\((\d+),R\)", name)
    if m:
        return _fp_sum(_candidate_fingerprint(f"sl({m.group(1)},R)"), _R_FP)
    m = _re.fullmatch(r"su\*\((\d+)\)", name)
    if m:
        two_n = int(m.group(1))
        if two_n % 2:
            raise ValueError(f"bad candidate name {name!r}")
        return _candidate_fingerprint(f"sl({two_n // 2},H)")
    m = _re.fullmatch(r"(so|su|sp)\((\d+)\)", name)
    if m:
        return _compact_fingerprint(m.group(1), int(m.group(2)))
    if name == "so(2,C)":
        # realified abelian plane
        return RealFormFingerprint(2, 2, (0, 2, 0), 0)
    alg = build_classical(name)
    return fingerprint_of_algebra(alg)


def identify_real_form(fp: RealFormFingerprint, candidates) -> str:
    """Unique fingerprint match among the named candidates, or "unidentified"."""
    matches = []
    for name in dict.fromkeys(candidates):
        if _candidate_fingerprint(name) == fp:
            matches.append(name)
    if len(matches) == 1:
        return matches[0]
    return "unidentified"


# ---------------------------------------------------------------------------
# boundary classification


@dataclass(frozen=True)
class BoundaryComponent:
    representative: Vector
    orbit_size: int
    symmetric: bool
    stabilizer_fingerprint: RealFormFingerprint
    identified_name: str


def component_at(alg: LieAlgebraRealization, Y, orbit_size: int,
                 candidates) -> BoundaryComponent:
    """Full per-orbit pipeline: tau, stabilizer, fingerprint, identification."""
    tau = tau_endomorphism(alg, Y)
    h = stabilizer_subalgebra(alg, Y)
    fp = fingerprint(h, alg)
    name = identify_real_form(fp, candidates)
    return BoundaryComponent(
        representative=tuple(vec(Y)),
        orbit_size=orbit_size,
        symmetric=tau.is_involution,
        stabilizer_fingerprint=fp,
        identified_name=name,
    )


def nonsymmetric_targets(g_name: str) -> list[str]:
    """Reference targets for the non-symmetric half-spectrum components."""
    parsed = parse_algebra_name(g_name)
    if parsed.kind == "so_pq":
        p, q = sorted(parsed.params)
        if 3 <= p < q:
            return [join_sum(f"so({p},C)", so_name(0, q - p))]
    if parsed.kind == "so_C":
        n = parsed.params[0]
        if n % 2 == 1 and n >= 7:
            return [f"so*({n - 1})"]
    return []


def _orbit_candidates(parsed: ParsedName, g_name: str, rep: Vector,
                      lookup: list[str]) -> list[str]:
    kind = parsed.kind
    if kind in ("sl_R", "sl_C", "sl_H"):
        qpos = sum(1 for c in rep if c > 0)
        return [lookup[qpos - 1]]
    if kind in ("so_pq", "so_C"):
        nonzero = sum(1 for c in rep if c)
        if nonzero == 1:  # the long-root vertex e_1
            return [lookup[0]]
        extra = nonsymmetric_targets(g_name)
        if extra:
            return extra
        return lookup[1:] or []
    # single-component families: the tube rows, or nothing for BC types
    return lookup


def classify_boundary(g_name: str):
    """Boundary components of the crown of g, in canonical orbit order."""
    alg = build_classical(g_name)
    restricted_roots(alg)  # verifies the chart before any classification
    dec = extreme_orbits(CrownPolytope(alg.datum))
    lookup = lookup_causal_pairs(alg.name)
    parsed = parse_algebra_name(alg.name)
    out = []
    for orb in dec.orbits:
        cands = _orbit_candidates(parsed, alg.name, orb.representative, lookup)
        out.append(component_at(alg, orb.representative, orb.size, cands))
    return out


def _xi0_candidates(parsed: ParsedName) -> list[str]:
    if parsed.kind == "so_pq":
        p, q = sorted(parsed.params)
        if p == q:
            return [f"so({p},C)"]
        return [join_sum(f"so({p},C)", so_name(0, q - p))]
    n = parsed.params[0]
    return [f"so*({n - 1})" if n % 2 else f"so*({n})"]


def classify_xi0_boundary(g_name: str):
    """Components of the flattened boundary piece, under the algebra's group."""
    alg = build_classical(g_name)
    restricted_roots(alg)
    dec = extreme_orbits(xi0_polytope(g_name))
    points = set()
    for orb in dec.orbits:
        points.update(orb.elements)
    parsed = parse_algebra_name(alg.name)
    cands = _xi0_candidates(parsed)
    comps = []
    while points:
        pt = next(iter(points))
        rep = dominant_representative(alg.datum, pt)
        elems = orbit(alg.datum, rep).elements
        points.difference_update(elems)
        comps.append((rep, len(elems)))
    comps.sort(key=lambda rc: rc[0], reverse=True)
    return [component_at(alg, rep, size, cands) for rep, size in comps]
