"""Leibniz algebras given by structure constants.

``tensor[i][j]`` is the coordinate vector of the product ``e_i e_j``.  The
house law is the left Leibniz identity ``a(bc) = (ab)c + b(ac)``; "ideal"
always means two-sided.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionError, InternalError, PreconditionError
from .linalg import Matrix, Subspace, _rref_rows, combine


@dataclass(frozen=True)
class Algebra:
    field: object
    dim: int
    tensor: tuple
    labels: tuple | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        d = self.dim
        if len(self.tensor) != d or any(len(r) != d for r in self.tensor) or any(
                len(v) != d for r in self.tensor for v in r):
            raise DimensionError(f"structure tensor is not {d}x{d}x{d}")
        if self.labels is not None:
            if len(self.labels) != d or len(set(self.labels)) != d:
                raise DimensionError("labels must be dim distinct names")

    @classmethod
    def from_products(cls, field, dim, products, labels=None):
        """Build from a mapping ``(i, j) -> {k: coeff}`` (0-based); the rest is zero."""
        z = field.zero
        t = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), result in products.items():
            for k, c in result.items():
                t[i][j][k] = field.add(t[i][j][k], field.norm(c))
        return cls(field, dim, tuple(tuple(tuple(v) for v in row) for row in t),
                   tuple(labels) if labels is not None else None)

    @classmethod
    def zero_algebra(cls, field, dim, labels=None):
        return cls.from_products(field, dim, {}, labels)

    def basis_vector(self, i):
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    @property
    def zero_vector(self):
        return (self.field.zero,) * self.dim

    def label(self, i):
        return self.labels[i] if self.labels else f"e{i + 1}"

    def full(self):
        return Subspace.full(self.field, self.dim)

    def zero(self):
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors):
        return Subspace.span(self.field, self.dim, vectors)

    def nonzero_products(self):
        for i in range(self.dim):
            for j in range(self.dim):
                if any(self.tensor[i][j]):
                    yield i, j, self.tensor[i][j]


@dataclass(frozen=True)
class IdentityWitness:
    """A basis pair or triple on which an identity fails (``lhs != rhs``)."""

    kind: str
    indices: tuple
    lhs: tuple
    rhs: tuple


def _check_vec(alg, v):
    if len(v) != alg.dim:
        raise DimensionError(f"vector of length {len(v)} in algebra of dim {alg.dim}")


def multiply(alg, u, v):
    _check_vec(alg, u)
    _check_vec(alg, v)
    f = alg.field
    out = [f.zero] * alg.dim
    t = alg.tensor
    for i, a in enumerate(u):
        if not a:
            continue
        row = t[i]
        for j, b in enumerate(v):
            if not b:
                continue
            c = a * b
            for k, x in enumerate(row[j]):
                if x:
                    out[k] = out[k] + c * x
    if f.is_prime:
        p = f.p
        return tuple(x % p for x in out)
    return tuple(out)


def _add(f, u, v):
    return tuple(f.add(a, b) for a, b in zip(u, v))


def _sub(f, u, v):
    return tuple(f.sub(a, b) for a, b in zip(u, v))


def left_op(alg, x):
    """Matrix of ``v -> x v``."""
    _check_vec(alg, x)
    cols = [multiply(alg, x, alg.basis_vector(j)) for j in range(alg.dim)]
    return Matrix.from_columns(alg.field, cols, alg.dim)


def right_op(alg, x):
    """Matrix of ``v -> v x``."""
    _check_vec(alg, x)
    cols = [multiply(alg, alg.basis_vector(j), x) for j in range(alg.dim)]
    return Matrix.from_columns(alg.field, cols, alg.dim)


def _basis_product(alg, i, v):
    """``e_i v`` for a coordinate vector ``v``."""
    f = alg.field
    out = [f.zero] * alg.dim
    row = alg.tensor[i]
    for j, b in enumerate(v):
        if b:
            for k, x in enumerate(row[j]):
                if x:
                    out[k] = out[k] + b * x
    if f.is_prime:
        return tuple(x % f.p for x in out)
    return tuple(out)


def _vector_times_basis(alg, v, j):
    """``v e_j`` for a coordinate vector ``v``."""
    f = alg.field
    out = [f.zero] * alg.dim
    for i, a in enumerate(v):
        if a:
            for k, x in enumerate(alg.tensor[i][j]):
                if x:
                    out[k] = out[k] + a * x
    if f.is_prime:
        return tuple(x % f.p for x in out)
    return tuple(out)


def check_leibniz(alg):
    """Left Leibniz identity on all basis triples; returns ``(ok, witness)``."""
    f = alg.field
    t = alg.tensor
    d = alg.dim
    for a in range(d):
        for b in range(d):
            ab = t[a][b]
            for c in range(d):
                lhs = _basis_product(alg, a, t[b][c])
                rhs = _add(f, _vector_times_basis(alg, ab, c), _basis_product(alg, b, t[a][c]))
                if lhs != rhs:
                    return False, IdentityWitness("leibniz", (a, b, c), lhs, rhs)
    return True, None


def check_lie(alg):
    """Antisymmetry (squares included) and Jacobi on basis pairs/triples."""
    f = alg.field
    t = alg.tensor
    d = alg.dim
    zero = alg.zero_vector
    for i in range(d):
        if any(t[i][i]):
            return False, IdentityWitness("antisymmetry", (i, i), t[i][i], zero)
        for j in range(i + 1, d):
            neg = tuple(f.neg(x) for x in t[j][i])
            if t[i][j] != neg:
                return False, IdentityWitness("antisymmetry", (i, j), t[i][j], neg)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                s = _add(f, _basis_product(alg, a, t[b][c]), _basis_product(alg, b, t[c][a]))
                s = _add(f, s, _basis_product(alg, c, t[a][b]))
                if any(s):
                    return False, IdentityWitness("jacobi", (a, b, c), s, zero)
    return True, None


def is_leibniz(alg):
    return check_leibniz(alg)[0]


def is_lie(alg):
    return check_lie(alg)[0]


def subspace_product(alg, u, v):
    u._check(v)
    return alg.span([multiply(alg, a, b) for a in u.basis for b in v.basis])


def generated_subalgebra(alg, gens):
    s = alg.span(gens)
    while True:
        nxt = s + subspace_product(alg, s, s)
        if nxt == s:
            return s
        s = nxt


def is_subalgebra(alg, u):
    if u.dim != alg.dim:
        raise DimensionError("subspace and algebra dimension differ")
    b = u.basis
    for x in b:
        for y in b:
            if multiply(alg, x, y) not in u:
                return False
    return True


def is_ideal(alg, u):
    if u.dim != alg.dim:
        raise DimensionError("subspace and algebra dimension differ")
    for x in u.basis:
        for i in range(alg.dim):
            if _basis_product(alg, i, x) not in u:
                return False
            if _vector_times_basis(alg, x, i) not in u:
                return False
    return True


def is_left_ideal(alg, u):
    """``L u`` inside ``u`` (invariance under every left multiplication)."""
    return all(_basis_product(alg, i, x) in u for x in u.basis for i in range(alg.dim))


def _tensor_from_fn(field, dim, fn):
    return tuple(tuple(fn(i, j) for j in range(dim)) for i in range(dim))


def quotient(alg, ideal):
    """Quotient algebra on the non-pivot coordinates of ``ideal``; returns ``(Q, projection)``."""
    if not is_ideal(alg, ideal):
        raise PreconditionError("quotient by a subspace that is not an ideal")
    f = alg.field
    piv = set(ideal.pivots)
    keep = [j for j in range(alg.dim) if j not in piv]

    def proj(v):
        w = ideal.reduce(v)
        return tuple(w[j] for j in keep)

    tensor = _tensor_from_fn(f, len(keep), lambda a, b: proj(alg.tensor[keep[a]][keep[b]]))
    labels = tuple(alg.labels[j] for j in keep) if alg.labels else None
    q = Algebra(f, len(keep), tensor, labels)
    projection = Matrix.from_columns(f, [proj(alg.basis_vector(j)) for j in range(alg.dim)],
                                     len(keep))
    return q, projection


def subalgebra_as_algebra(alg, s):
    """Induced algebra on ``s`` in its echelon basis; returns ``(S, inclusion)``."""
    if not is_subalgebra(alg, s):
        raise PreconditionError("subspace is not closed under the product")
    b = s.basis
    tensor = _tensor_from_fn(alg.field, len(b), lambda i, j: s.coordinates(multiply(alg, b[i], b[j])))
    sub = Algebra(alg.field, len(b), tensor)
    return sub, Matrix.from_columns(alg.field, list(b), alg.dim)


def change_basis(alg, basis):
    """Re-express ``alg`` in a new basis (list of coordinate vectors)."""
    f = alg.field
    d = alg.dim
    if len(basis) != d:
        raise DimensionError("need exactly dim basis vectors")
    p = Matrix.from_columns(f, [tuple(f.norm(x) for x in v) for v in basis], d)
    aug = [p.rows[i] + Matrix.identity(f, d).rows[i] for i in range(d)]
    rows, pivots = _rref_rows(f, aug, 2 * d)
    if pivots[:d] != list(range(d)) or len(rows) < d:
        raise PreconditionError("basis vectors are linearly dependent")
    inv = Matrix(f, tuple(r[d:] for r in rows[:d]), d)
    vecs = p.columns()
    tensor = _tensor_from_fn(f, d, lambda i, j: inv.apply(multiply(alg, vecs[i], vecs[j])))
    return Algebra(f, d, tensor)


def image_of(mat, s):
    """Image of a subspace under a linear map."""
    return Subspace.span(mat.field, mat.nrows, [mat.apply(v) for v in s.basis])


def preimage(alg, projection, ideal, s):
    """Full preimage of a quotient subspace ``s`` under ``projection`` (kernel ``ideal``)."""
    piv = set(ideal.pivots)
    keep = [j for j in range(alg.dim) if j not in piv]
    f = alg.field
    lifts = []
    for v in s.basis:
        w = [f.zero] * alg.dim
        for a, j in enumerate(keep):
            w[j] = v[a]
        lifts.append(tuple(w))
    return ideal + alg.span(lifts)


def assert_homomorphism(src, dst, mat):
    """Raise :class:`InternalError` unless ``mat`` respects products on basis pairs."""
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = mat.apply(src.tensor[i][j])
            rhs = multiply(dst, mat.column(i), mat.column(j))
            if lhs != rhs:
                raise InternalError(f"map is not multiplicative on basis pair ({i}, {j})")


def combination(alg, coeffs, vectors):
    return combine(alg.field, coeffs, vectors, alg.dim)
