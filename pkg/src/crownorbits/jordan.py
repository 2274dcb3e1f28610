"""Euclidean Jordan algebras of symmetric and Hermitian matrices.

Covers the rank-n matrix algebras over R and C: the determinant, exact
signature strata of the characteristic polynomial (square-free splitting
plus Sturm chains, no floating point), the diagonal frame points, the
sign-vector extreme orbits of the flat boundary domain, and stabilizer
algebras of the cone action g.x = g x g+ with their fingerprints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import product
from re import fullmatch

from sympy import Poly, Rational, Symbol, sturm

from .crown import CrownPolytope, ExtremeDecomposition, is_extreme_point
from .liealg import RealFormFingerprint, _assemble, fingerprint, identify_real_form
from .linalg import GaussianRational, gcharpoly, gmat_det, inertia, transpose, nullspace
from .rootsys import build_root_system
from .weyl import dominant_representative, orbit

_GI = GaussianRational
_LAMBDA = Symbol("lam")
_MAX_N = 8


@dataclass(frozen=True)
class JordanAlgebra:
    """Symm(n,R) or Herm(n,C) with the product x.y = (xy + yx)/2."""

    family: str  # "Symm" or "Herm"
    n: int

    @property
    def name(self) -> str:
        base = "R" if self.family == "Symm" else "C"
        return f"{self.family}({self.n},{base})"

    @property
    def unit(self):
        n = self.n
        return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]

    @property
    def frame(self) -> tuple:
        """Diagonal idempotents E_jj; they sum to the unit."""
        n = self.n
        return tuple(
            [[Q(1) if i == j == k else Q(0) for j in range(n)] for i in range(n)]
            for k in range(n)
        )

    def product(self, x, y):
        a = _element(self, x)
        b = _element(self, y)
        n = self.n
        out = [
            [
                sum((a[i][k] * b[k][j] + b[i][k] * a[k][j] for k in range(n)), _GI(0))
                / 2
                for j in range(n)
            ]
            for i in range(n)
        ]
        if self.family == "Symm":
            return [[c.re for c in row] for row in out]
        return out


@dataclass(frozen=True)
class StratumLabel:
    p: int  # positive eigenvalues, with multiplicity
    regular: bool  # no zero eigenvalue


def build_jordan(name: str) -> JordanAlgebra:
    m = fullmatch(r"\s*(Symm|Herm)\(\s*(\d+)\s*,\s*([A-Za-z])\s*\)\s*", name)
    if m:
        family, n, base = m.group(1), int(m.group(2)), m.group(3).upper()
        if (family, base) in (("Symm", "R"), ("Herm", "C")):
            if not 1 <= n <= _MAX_N:
                raise ValueError(f"rank {n} out of the supported range 1..{_MAX_N}")
            return JordanAlgebra(family=family, n=n)
        if (family, base) == ("Herm", "H"):
            raise ValueError("quaternionic Hermitian algebras are not implemented")
    raise ValueError(
        f"unrecognized Jordan algebra {name!r}; expected Symm(n,R) or Herm(n,C)"
    )


def _coerce(entry) -> GaussianRational:
    if isinstance(entry, GaussianRational):
        return entry
    if isinstance(entry, (int, Q)):
        return _GI(entry)
    raise ValueError(f"unsupported matrix entry {entry!r}")


def _element(V: JordanAlgebra, x) -> list:
    """Validate and return x as an n x n Gaussian-rational matrix."""
    n = V.n
    if len(x) != n or any(len(row) != n for row in x):
        raise ValueError(f"expected an {n} x {n} matrix")
    m = [[_coerce(c) for c in row] for row in x]
    for i in range(n):
        for j in range(n):
            bar = _GI(m[j][i].re, -m[j][i].im)
            if m[i][j] != bar:
                raise ValueError(f"element is not {V.family.lower()}etric-Hermitian")
            if V.family == "Symm" and m[i][j].im != 0:
                raise ValueError("Symm(n,R) elements must be real")
    return m


def jordan_det(V: JordanAlgebra, x) -> Q:
    """Matrix determinant; real on Hermitian input."""
    d = gmat_det(_element(V, x))
    if d.im != 0:
        raise AssertionError("Hermitian determinant came out complex")
    return d.re


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _variations(signs) -> int:
    seq = [s for s in signs if s]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def _positive_roots(f: Poly) -> int:
    """Distinct roots of a square-free rational polynomial in (0, oo)."""
    if f.eval(0) == 0:
        f = f.quo(Poly(_LAMBDA, _LAMBDA))
    if f.degree() <= 0:
        return 0
    chain = sturm(f)
    at_zero = _variations(_sign(h.eval(0)) for h in chain)
    at_inf = _variations(_sign(h.LC()) for h in chain)
    return at_zero - at_inf


def signature_stratum(V: JordanAlgebra, x) -> StratumLabel:
    """Count positive eigenvalues exactly via Sturm chains on (0, oo)."""
    coeffs = gcharpoly(_element(V, x))  # constant term first, monic
    poly = Poly([Rational(c) for c in reversed(coeffs)], _LAMBDA, domain="QQ")
    p = 0
    for factor, mult in poly.sqf_list()[1]:
        p += mult * _positive_roots(factor)
    return StratumLabel(p=p, regular=coeffs[0] != 0)


def element_inertia(V: JordanAlgebra, x) -> tuple[int, int, int]:
    """Congruence-invariant inertia, the independent check on the strata.

    The Hermitian case runs on the symmetric realification, which doubles
    each eigenvalue.
    """
    m = _element(V, x)
    n = V.n
    if V.family == "Symm":
        return inertia([[c.re for c in row] for row in m])
    re = [[c.re for c in row] for row in m]
    im = [[c.im for c in row] for row in m]
    big = [re[i] + [-c for c in im[i]] for i in range(n)]
    big += [im[i] + re[i] for i in range(n)]
    pos, zero, neg = inertia(big)
    return (pos // 2, zero // 2, neg // 2)


def frame_point(V: JordanAlgebra, p: int):
    """The diagonal with p entries +1 followed by n - p entries -1."""
    n = V.n
    if not 0 <= p <= n:
        raise ValueError(f"stratum index {p} out of range 0..{n}")
    return [
        [(Q(1) if i < p else Q(-1)) if i == j else Q(0) for j in range(n)]
        for i in range(n)
    ]


def xi0_extreme_orbits(V: JordanAlgebra) -> ExtremeDecomposition:
    """Sign-vector extreme set, partitioned under coordinate permutations.

    The flat boundary polytope is cut out by the doubled restricted system,
    so its extreme set is the full sign-vector cube; the acting Weyl group
    is only the S_n of the rank-(n-1) carrier, giving n + 1 orbits.
    """
    n = V.n
    if n < 2:
        raise ValueError("sign-vector analysis needs rank >= 2")
    carrier = build_root_system("A", n - 1)
    P = CrownPolytope(build_root_system("C", n))
    reps: dict = {}
    for signs in product((Q(1), Q(-1)), repeat=n):
        if not is_extreme_point(P, signs):
            raise AssertionError("sign vector fell off the polytope boundary")
        reps[dominant_representative(carrier, signs)] = None
    orbits = [orbit(carrier, rep) for rep in reps]
    orbits.sort(key=lambda o: o.representative, reverse=True)
    if sum(o.size for o in orbits) != 2**n:
        raise AssertionError("sign-vector orbits do not cover the cube")
    return ExtremeDecomposition(polytope=P, orbits=tuple(orbits))


_AMBIENT_CACHE: dict = {}


def _cone_ambient(V: JordanAlgebra):
    """The cone automorphism algebra as a realization: gl(n,R) or sl(n,C)+RI."""
    key = (V.family, V.n)
    cached = _AMBIENT_CACHE.get(key)
    if cached is not None:
        return cached
    n = V.n
    mats: list[dict] = []
    if V.family == "Symm":
        for a in range(n):
            for b in range(n):
                mats.append({(a, b): _GI(1)})
    else:
        for a in range(n):
            for b in range(n):
                if a != b:
                    mats.append({(a, b): _GI(1)})
                    mats.append({(a, b): _GI(0, 1)})
        for a in range(n - 1):
            mats.append({(a, a): _GI(1), (a + 1, a + 1): _GI(-1)})
            mats.append({(a, a): _GI(0, 1), (a + 1, a + 1): _GI(0, -1)})
        mats.append({(a, a): _GI(1) for a in range(n)})
    alg = _assemble(f"cone-aut({V.name})", mats, n, [], None, ())
    _AMBIENT_CACHE[key] = (alg, mats)
    return alg, mats


def stratum_stabilizer_algebra(V: JordanAlgebra, p: int):
    """Fingerprint and name of {A in g : A z_p + z_p A+ = 0}."""
    n = V.n
    z = [Q(1) if i < p else Q(-1) for i in range(n)]
    ambient, mats = _cone_ambient(V)
    rows = []
    for m in mats:
        # constraint matrix M z + z M+ flattened to 2n^2 rationals
        acc: dict = {}
        for (r, c), v in m.items():
            acc[(r, c)] = acc.get((r, c), _GI(0)) + v * z[c]
            acc[(c, r)] = acc.get((c, r), _GI(0)) + _GI(v.re, -v.im) * z[c]
        flat = []
        for r in range(n):
            for c in range(n):
                g = acc.get((r, c), _GI(0))
                flat.append(g.re)
                flat.append(g.im)
        rows.append(flat)
    stab = [tuple(cv) for cv in nullspace(transpose(rows))]
    fp = fingerprint(stab, ambient)
    kind = "so" if V.family == "Symm" else "su"
    if p in (0, n):
        expected = f"{kind}({n})"
    else:
        expected = f"{kind}({p},{n - p})"
    return fp, identify_real_form(fp, [expected])


def stratum_transitivity_check(V: JordanAlgebra, p: int, samples) -> bool:
    """All samples share the frame point's inertia, the orbit invariant."""
    target = (p, 0, V.n - p)
    return all(element_inertia(V, x) == target for x in samples)
