"""Exact linear algebra over the rationals and Gaussian rationals.

All routines work with fractions.Fraction scalars; nothing here ever touches a
float.  Vectors are tuples, matrices are lists of row lists (inputs may be any
nested sequences of ints / Fractions).
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Vector = tuple[Q, ...]

ZERO = Q(0)
ONE = Q(1)


def vec(entries: Iterable) -> Vector:
    return tuple(Q(e) for e in entries)


def vadd(u: Sequence[Q], v: Sequence[Q]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence[Q], v: Sequence[Q]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Sequence[Q]) -> Vector:
    c = Q(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Q], v: Sequence[Q]) -> Q:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero_vector(v: Sequence[Q]) -> bool:
    return all(a == 0 for a in v)


def _to_rows(matrix: Sequence[Sequence]) -> list[list[Q]]:
    return [[Q(e) for e in row] for row in matrix]


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = _to_rows(matrix)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [e / pv for e in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                row_i = rows[i]
                for j in range(c, ncols):
                    if lead[j]:
                        row_i[j] -= f * lead[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence]) -> list[Vector]:
    """Basis of the right kernel {x : M x = 0}."""
    rows = _to_rows(matrix)
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [ZERO] * ncols
        x[fc] = ONE
        for r, pc in enumerate(pivots):
            x[pc] = -red[r][fc]
        basis.append(tuple(x))
    return basis


def solve_square(matrix: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """Unique solution of a square system, or None if singular."""
    rows = _to_rows(matrix)
    n = len(rows)
    b = [Q(e) for e in rhs]
    if any(len(row) != n for row in rows) or len(b) != n:
        raise ValueError("solve_square expects an n x n system")
    aug = [rows[i] + [b[i]] for i in range(n)]
    red, pivots = rref(aug)
    if pivots == list(range(n)):
        return tuple(red[i][n] for i in range(n))
    return None


def solve_rref(matrix: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """Some solution of M x = b (possibly underdetermined), or None."""
    rows = _to_rows(matrix)
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [rows[i] + [Q(rhs[i])] for i in range(len(rows))]
    red, pivots = rref(aug)
    if ncols in pivots:  # pivot in the rhs column: inconsistent
        return None
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Q]]:
    ba = _to_rows(b)
    cols = list(zip(*ba))
    return [[dot([Q(e) for e in row], col) for col in cols] for row in a]


def mat_vec(a: Sequence[Sequence], v: Sequence) -> Vector:
    vv = vec(v)
    return tuple(dot(vec(row), vv) for row in a)


def transpose(a: Sequence[Sequence]) -> list[list[Q]]:
    return [list(col) for col in zip(*_to_rows(a))]


def identity_matrix(n: int) -> list[list[Q]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_inverse(matrix: Sequence[Sequence]) -> list[list[Q]]:
    rows = _to_rows(matrix)
    n = len(rows)
    aug = [rows[i] + identity_matrix(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [red[i][n:] for i in range(n)]


def inertia(matrix: Sequence[Sequence]) -> tuple[int, int, int]:
    """Signature (n_plus, n_zero, n_minus) of a symmetric rational matrix.

    Computed by congruence (symmetric Gaussian elimination); a zero diagonal
    is repaired with the congruence e_i -> e_i + e_j, which keeps the inertia.
    """
    s = _to_rows(matrix)
    n = len(s)
    for i in range(n):
        if len(s[i]) != n:
            raise ValueError("inertia expects a square matrix")
        for j in range(i):
            if s[i][j] != s[j][i]:
                raise ValueError("inertia expects a symmetric matrix")
    plus = minus = zero = 0
    active = list(range(n))
    while active:
        k = next((a for a in active if s[a][a] != 0), None)
        if k is None:
            pair = next(
                ((i, j) for i in active for j in active if i < j and s[i][j] != 0),
                None,
            )
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            for t in range(n):
                s[i][t] += s[j][t]
            for t in range(n):
                s[t][i] += s[t][j]
            k = i
        d = s[k][k]
        if d > 0:
            plus += 1
        else:
            minus += 1
        active.remove(k)
        factors = {a: s[a][k] / d for a in active if s[a][k] != 0}
        if factors:
            lead = s[k]
            for a, f in factors.items():
                row_a = s[a]
                for b in active:
                    if lead[b]:
                        row_a[b] -= f * lead[b]
    return plus, zero, minus


class GaussianRational:
    """Element of Q(i), exact complex scalar with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Q(re)
        self.im = Q(im)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Q)):
            return cls(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if not self.im:
            return f"{self.re}"
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


GI = GaussianRational
I_UNIT = GaussianRational(0, 1)


def gmat(entries: Sequence[Sequence]) -> list[list[GaussianRational]]:
    out = []
    for row in entries:
        out.append(
            [e if isinstance(e, GaussianRational) else GaussianRational(e) for e in row]
        )
    return out


def gmat_mul(a, b) -> list[list[GaussianRational]]:
    n, m = len(a), len(b[0])
    k = len(b)
    out = [[GaussianRational() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if not c:
                continue
            brow = b[t]
            for j in range(m):
                if brow[j]:
                    orow[j] = orow[j] + c * brow[j]
    return out


def gmat_sub(a, b) -> list[list[GaussianRational]]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def gmat_dagger(a) -> list[list[GaussianRational]]:
    n, m = len(a), len(a[0])
    return [[a[i][j].conjugate() for i in range(n)] for j in range(m)]


def gmat_det(a) -> GaussianRational:
    """Determinant over Q(i) by fraction-full Gaussian elimination."""
    m = [row[:] for row in a]
    n = len(m)
    det = GaussianRational(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return GaussianRational(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = GaussianRational(1) / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                for j in range(c, n):
                    m[r][j] = m[r][j] - f * m[c][j]
    return det


def gcharpoly(a) -> list[Q]:
    """Characteristic polynomial det(t*I - A) of a Gaussian-rational matrix.

    Faddeev-LeVerrier recursion.  Returns rational coefficients [c_0, ..., c_n]
    with c_n = 1 (constant term first); raises if any coefficient has a
    nonzero imaginary part (cannot happen for Hermitian input).
    """
    n = len(a)
    coeffs_rev: list[GaussianRational] = [GaussianRational(1)]
    m = [[GaussianRational(1) if i == j else GaussianRational() for j in range(n)] for i in range(n)]
    am = a
    for k in range(1, n + 1):
        am = gmat_mul(a, m)
        tr = GaussianRational()
        for i in range(n):
            tr = tr + am[i][i]
        ck = -(tr / k)
        coeffs_rev.append(ck)
        m = [row[:] for row in am]
        for i in range(n):
            m[i][i] = m[i][i] + ck
    out = []
    for c in reversed(coeffs_rev):
        if c.im != 0:
            raise ValueError("characteristic polynomial has non-real coefficient")
        out.append(c.re)
    return out


class SpanSolver:
    """Expresses vectors in the span of a fixed independent family, fast.

    Given basis rows B (k x m, independent), precomputes C = B^T (B B^T)^{-1};
    then coords(v) = v C, verified by an exact residual check.  Lookup cost is
    proportional to the support of v, which is what makes sparse bracket
    expansion cheap.
    """

    def __init__(self, basis: Sequence[Sequence[Q]]):
        self.basis = [vec(b) for b in basis]
        self.k = len(self.basis)
        self.m = len(self.basis[0]) if self.basis else 0
        gram = [[dot(bi, bj) for bj in self.basis] for bi in self.basis]
        ginv = mat_inverse(gram)  # raises if the family is dependent
        # C rows indexed by ambient coordinate: C[i][j] = sum_t B[t][i] * ginv[t][j]
        self.c_rows: dict[int, list[Q]] = {}
        for t, b in enumerate(self.basis):
            gr = ginv[t]
            for i, e in enumerate(b):
                if e:
                    row = self.c_rows.get(i)
                    if row is None:
                        row = [ZERO] * self.k
                        self.c_rows[i] = row
                    for j in range(self.k):
                        if gr[j]:
                            row[j] += e * gr[j]

    def coords(self, v: Sequence[Q]) -> Vector | None:
        """Coordinates of v in the basis, or None if v is outside the span."""
        x = [ZERO] * self.k
        support = [(i, e) for i, e in enumerate(v) if e]
        for i, e in support:
            row = self.c_rows.get(i)
            if row is None:
                return None
            for j in range(self.k):
                if row[j]:
                    x[j] += e * row[j]
        # residual check: x . B == v
        recon = [ZERO] * self.m
        for j, xi in enumerate(x):
            if xi:
                for i, e in enumerate(self.basis[j]):
                    if e:
                        recon[i] += xi * e
        for i, e in enumerate(v):
            if recon[i] != e:
                return None
        return tuple(x)
