"""Exact dense linear algebra over a :class:`~leibalg.exactfield.Field`.

Vectors are tuples of raw scalars.  Matrices act on column vectors, so a
matrix for a linear map ``v -> T v`` stores the image of ``e_j`` in its
``j``-th column.  Subspaces are stored by their reduced row-echelon basis,
which makes equality of subspaces plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import DimensionError, FieldError, PreconditionError


def _rref_rows(field, rows, ncols):
    """Row-reduce ``rows`` in place; return (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    p = field.p
    for c in range(ncols):
        if r == len(rows):
            break
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if p is not None:
            s = pow(prow[c], -1, p)
            if s != 1:
                prow = [x * s % p for x in prow]
            rows[r] = prow
            for i in range(len(rows)):
                if i != r:
                    f = rows[i][c]
                    if f:
                        ri = rows[i]
                        rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        else:
            s = 1 / prow[c]
            if s != 1:
                prow = [x * s for x in prow]
            rows[r] = prow
            for i in range(len(rows)):
                if i != r:
                    f = rows[i][c]
                    if f:
                        ri = rows[i]
                        rows[i] = [a - f * b for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in rows[:r]], pivots


@dataclass(frozen=True)
class Matrix:
    field: object
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = tuple(tuple(field.norm(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged matrix rows")
        return cls(field, rows, ncols)

    @classmethod
    def from_columns(cls, field, cols, nrows):
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(field, rows, len(cols))

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix.from_columns(self.field, self.rows, self.ncols)

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        f = self.field
        out = []
        for r in self.rows:
            s = f.zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(f.norm(s) if f.is_prime else s)
        return tuple(out)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(self.field, cols, self.nrows)

    def __add__(self, other):
        f = self.field
        return Matrix(f, tuple(tuple(f.add(a, b) for a, b in zip(r, s))
                               for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other):
        f = self.field
        return Matrix(f, tuple(tuple(f.sub(a, b) for a, b in zip(r, s))
                               for r, s in zip(self.rows, other.rows)), self.ncols)

    def scale(self, c):
        f = self.field
        return Matrix(f, tuple(tuple(f.mul(c, a) for a in r) for r in self.rows), self.ncols)

    def power(self, k):
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def rref(m):
    """Reduced row-echelon form of ``m`` (zero rows kept at the bottom)."""
    rows, pivots = _rref_rows(m.field, m.rows, m.ncols)
    full = rows + [(m.field.zero,) * m.ncols] * (m.nrows - len(rows))
    return Matrix(m.field, tuple(full), m.ncols), len(rows), pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``F^dim`` held by its reduced row-echelon basis."""

    field: object
    dim: int
    basis: tuple

    @classmethod
    def span(cls, field, dim, vectors):
        vecs = []
        for v in vectors:
            if len(v) != dim:
                raise DimensionError(f"vector of length {len(v)} in F^{dim}")
            vecs.append(tuple(field.norm(x) for x in v))
        rows, _ = _rref_rows(field, vecs, dim)
        return cls(field, dim, tuple(rows))

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, ())

    @classmethod
    def full(cls, field, dim):
        return cls(field, dim, Matrix.identity(field, dim).rows)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        out = []
        for row in self.basis:
            for j, x in enumerate(row):
                if x != 0:
                    out.append(j)
                    break
        return out

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.rank == self.dim

    def _check(self, other):
        if self.dim != other.dim or self.field != other.field:
            raise DimensionError(
                f"ambient mismatch: {self.field}^{self.dim} vs {other.field}^{other.dim}")

    def reduce(self, v):
        """Remainder of ``v`` after clearing this subspace's pivot coordinates."""
        f = self.field
        w = list(v)
        for row, c in zip(self.basis, self.pivots):
            a = w[c]
            if a:
                w = [f.sub(x, f.mul(a, y)) for x, y in zip(w, row)]
        return tuple(w)

    def __contains__(self, v):
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in F^{self.dim}")
        return all(x == 0 for x in self.reduce(tuple(self.field.norm(x) for x in v)))

    def coordinates(self, v):
        """Coordinates of ``v`` in the echelon basis; ``v`` must lie in the subspace."""
        if v not in self:
            raise PreconditionError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def contains(self, other):
        self._check(other)
        return all(v in self for v in other.basis)

    def __le__(self, other):
        return other.contains(self)

    def __add__(self, other):
        self._check(other)
        return Subspace.span(self.field, self.dim, self.basis + other.basis)

    def __and__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.dim)
        f = self.field
        k = self.rank
        cols = list(self.basis) + [tuple(f.neg(x) for x in v) for v in other.basis]
        ker = kernel(Matrix.from_columns(f, cols, self.dim))
        vecs = []
        for sol in ker.basis:
            vecs.append(combine(f, sol[:k], self.basis, self.dim))
        return Subspace.span(f, self.dim, vecs)

    def sort_key(self):
        return (self.rank, self.basis)

    def __str__(self):
        if self.is_zero():
            return "0"
        body = ", ".join("(" + ",".join(self.field.format(x) for x in v) + ")" for v in self.basis)
        return "span{" + body + "}"


def combine(field, coeffs, vectors, dim):
    """Linear combination ``sum coeffs[i] * vectors[i]`` in ``F^dim``."""
    out = [field.zero] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] = out[j] + c * x
    if field.is_prime:
        p = field.p
        return tuple(x % p for x in out)
    return tuple(out)


def kernel(m):
    """Null space ``{v : m v = 0}`` as a canonical subspace of ``F^ncols``."""
    f = m.field
    rows, pivots = _rref_rows(f, m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    vecs = []
    for j in free:
        v = [f.zero] * m.ncols
        v[j] = f.one
        for row, c in zip(rows, pivots):
            v[c] = f.neg(row[j])
        vecs.append(tuple(v))
    return Subspace.span(f, m.ncols, vecs)


def image(m):
    return Subspace.span(m.field, m.nrows, m.columns())


def lattice_ops(op, u, v):
    """``sum``/``intersect``/``contains``/``equal`` on subspaces; ``member`` takes a vector."""
    if op == "member":
        return v in u
    u._check(v)
    if op == "sum":
        return u + v
    if op == "intersect":
        return u & v
    if op == "contains":
        return u.contains(v)
    if op == "equal":
        return u == v
    raise ValueError(f"unknown lattice operation {op!r}")


def _require_square(m):
    if not m.is_square:
        raise DimensionError(f"operator must be square, got {m.shape}")


def operator_nilpotent(m):
    _require_square(m)
    return m.power(m.nrows).is_zero()


def fitting_null(m):
    """Fitting null component: the kernel of ``m**d``."""
    _require_square(m)
    return kernel(m.power(m.nrows))


def restrict(m, s):
    """Matrix of ``m`` on the invariant subspace ``s`` in echelon coordinates."""
    _require_square(m)
    if m.nrows != s.dim:
        raise DimensionError("operator and subspace live in different spaces")
    cols = []
    for b in s.basis:
        w = m.apply(b)
        if w not in s:
            raise PreconditionError("subspace is not invariant under the operator")
        cols.append(s.coordinates(w))
    return Matrix.from_columns(m.field, cols, s.rank)


def charpoly(m):
    """Characteristic polynomial ``det(tI - m)``, coefficients low degree first.

    Faddeev-LeVerrier; only used over Q, where the divisions are exact.
    """
    _require_square(m)
    if m.field.is_prime:
        raise FieldError("charpoly is implemented for Q only")
    n = m.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = Matrix.identity(m.field, n)
    mk = Matrix.zeros(m.field, n, n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[n - k + 1]))
        tr = sum((mk.rows[i][i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -tr / k
    return coeffs


def _divisors(n):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))


def rational_roots(coeffs):
    """Rational roots of a polynomial with Fraction coefficients (low degree first)."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


def eigenvalues(m):
    """Eigenvalues of ``m`` lying in its base field, ascending."""
    _require_square(m)
    f = m.field
    if f.is_prime:
        ident = Matrix.identity(f, m.nrows)
        return [lam for lam in f.elements()
                if not kernel(m - ident.scale(lam)).is_zero()]
    return rational_roots(charpoly(m))


def eigenspace(m, lam):
    return kernel(m - Matrix.identity(m.field, m.nrows).scale(lam))


def projective_points(field, basis, dim):
    """One spanning vector per line of ``span(basis)``, for finite fields.

    Coefficient vectors are normalized so their first nonzero entry is 1;
    lines come out sorted by their canonical spanning vector.
    """
    k = len(basis)
    pts = []
    for lead in range(k):
        for tail in product(field.elements(), repeat=k - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            v = combine(field, coeffs, basis, dim)
            pts.append(Subspace.span(field, dim, [v]).basis[0])
    return sorted(pts)
