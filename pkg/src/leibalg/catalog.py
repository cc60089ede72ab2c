"""Builders for the explicit algebra families and small standard examples.

Families ``cor_a``/``cor_b``/``thm5_2a``/``thm5_2b`` live on the basis
``(e_1, ..., e_p, x, y[, z])`` with indices of ``e`` taken mod ``p``.  The
module ``A = span(e_i)`` is abelian; in the ``leibniz`` variant ``A L = 0``,
in the ``lie`` variant the products are completed antisymmetrically.

The ``cor_*`` tables use negated actions (``x e_i = -e_{i+1}``,
``y e_i = -i e_i`` for ``cor_a``).  With negated actions the product on
``B`` must read ``yx = -x`` (resp. ``yx = -z``) for the left Leibniz
identity to hold; for ``p = 2`` this is the same as ``yx = x``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, check_leibniz, is_lie
from .errors import PreconditionError
from .exactfield import GF, Field
from .linalg import Matrix, Subspace

FAMILIES = ("cor_a", "cor_b", "thm5_2a", "thm5_2b", "heisenberg", "abelian",
            "cyclic_leibniz", "sl2")
P_FAMILIES = ("cor_a", "cor_b", "thm5_2a", "thm5_2b")
N_FAMILIES = ("abelian", "cyclic_leibniz")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    field: Field | None = None
    p: int | None = None
    variant: str = "leibniz"
    alpha: object = None
    n: int | None = None

    def resolved_field(self):
        if self.field is not None:
            return self.field
        if self.p is not None:
            return GF(self.p)
        raise PreconditionError(f"{self.family}: no field given")

    def validate(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")
        if self.variant not in ("lie", "leibniz"):
            raise PreconditionError(f"unknown variant {self.variant!r}")
        f = self.resolved_field()
        if self.family in P_FAMILIES:
            if self.p is None:
                raise PreconditionError(f"{self.family} needs p")
            if f.characteristic != self.p:
                raise PreconditionError(
                    f"{self.family}: field {f} does not have characteristic {self.p}")
        if self.alpha is not None and self.family != "thm5_2a":
            raise PreconditionError("alpha applies to thm5_2a only")
        if self.family in N_FAMILIES and (self.n is None or self.n < 0):
            raise PreconditionError(f"{self.family} needs a dimension n >= 0")
        return f

    def __str__(self):
        parts = []
        if self.p is not None:
            parts.append(f"p={self.p}")
        if self.n is not None:
            parts.append(f"n={self.n}")
        parts.append(str(self.resolved_field()))
        if self.family in P_FAMILIES:
            parts.append(self.variant)
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha}")
        return f"{self.family}({', '.join(parts)})"


def _mat(field, m, images):
    """m x m matrix whose column i is the coordinate vector ``images[i]`` (dict k -> c)."""
    cols = []
    for i in range(m):
        col = [field.zero] * m
        for k, c in images(i).items():
            col[k % m] = field.add(col[k % m], field.norm(c))
        cols.append(tuple(col))
    return Matrix.from_columns(field, cols, m)


def semidirect(h, module_dim, action, variant="leibniz", labels=None):
    """Semidirect sum ``A (+) H`` with ``A`` abelian of dimension ``module_dim``.

    ``action[k]`` is the matrix by which the ``k``-th basis vector of ``h``
    acts on ``A`` from the left.  Basis order of the result is ``A`` then ``H``.
    """
    f = h.field
    m = module_dim
    if len(action) != h.dim:
        raise PreconditionError("need one action matrix per basis vector of h")
    for a in action:
        if a.shape != (m, m):
            raise PreconditionError(f"action matrices must be {m}x{m}")
    if variant not in ("lie", "leibniz"):
        raise PreconditionError(f"unknown variant {variant!r}")
    if variant == "lie" and not is_lie(h):
        raise PreconditionError("lie variant needs a Lie algebra h")
    # rho(h_i h_j) = [rho(h_i), rho(h_j)]
    for i in range(h.dim):
        for j in range(h.dim):
            lhs = Matrix.zeros(f, m, m)
            for k, c in enumerate(h.tensor[i][j]):
                if c:
                    lhs = lhs + action[k].scale(c)
            rhs = action[i] @ action[j] - action[j] @ action[i]
            if lhs != rhs:
                raise PreconditionError(f"action is not compatible on h-basis pair ({i}, {j})")
    d = m + h.dim
    z = f.zero
    t = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i in range(h.dim):
        for j in range(h.dim):
            for k, c in enumerate(h.tensor[i][j]):
                t[m + i][m + j][m + k] = c
        for a in range(m):
            col = action[i].column(a)
            for k in range(m):
                t[m + i][a][k] = col[k]
                if variant == "lie":
                    t[a][m + i][k] = f.neg(col[k])
    if labels is None:
        hl = h.labels or tuple(f"h{i + 1}" for i in range(h.dim))
        labels = tuple(f"e{i + 1}" for i in range(m)) + tuple(hl)
    alg = Algebra(f, d, tuple(tuple(tuple(v) for v in row) for row in t), tuple(labels))
    ok, wit = check_leibniz(alg)
    if not ok:
        raise PreconditionError(f"semidirect sum fails the Leibniz identity at {wit.indices}")
    return alg


def heisenberg(field):
    return Algebra.from_products(field, 3, {(0, 1): {2: 1}, (1, 0): {2: -1}}, ("x", "y", "z"))


def abelian(n, field):
    return Algebra.zero_algebra(field, n)


def cyclic_leibniz(n, field):
    """``e_1 e_i = e_{i+1}`` for ``i < n``; every other product is zero."""
    return Algebra.from_products(field, n, {(0, i): {i + 1: 1} for i in range(n - 1)})


def sl2(field):
    prods = {(0, 1): {2: 1}, (1, 0): {2: -1},
             (2, 0): {0: 2}, (0, 2): {0: -2},
             (2, 1): {1: -2}, (1, 2): {1: 2}}
    return Algebra.from_products(field, 3, prods, ("e", "f", "h"))


def _two_dim_b(field, sign):
    # basis (x, y) with yx = sign * x
    return Algebra.from_products(field, 2, {(1, 0): {0: sign}, (0, 1): {0: -sign}}, ("x", "y"))


def _heisenberg_b(field, sign):
    # basis (x, y, z) with yx = sign * z
    return Algebra.from_products(field, 3, {(1, 0): {2: sign}, (0, 1): {2: -sign}},
                                 ("x", "y", "z"))


def _e_labels(p):
    return tuple(f"e{i}" for i in range(1, p + 1))


# e_i (1-based) is coordinate i - 1; e_{i+1} wraps mod p.
def _shift(field, p, sign):
    return _mat(field, p, lambda c: {(c + 1) % p: sign})


def _lowering(field, p):
    # y e_i = (i + 1) e_{i-1}
    return _mat(field, p, lambda c: {(c - 1) % p: c + 2})


def build(spec):
    f = spec.validate()
    fam = spec.family
    if fam == "heisenberg":
        return heisenberg(f)
    if fam == "abelian":
        return abelian(spec.n, f)
    if fam == "cyclic_leibniz":
        return cyclic_leibniz(spec.n, f)
    if fam == "sl2":
        return sl2(f)
    p = spec.p
    if fam == "cor_a":
        h = _two_dim_b(f, -1)
        act = [_shift(f, p, -1), _mat(f, p, lambda c: {c: -(c + 1)})]
    elif fam == "cor_b":
        h = _heisenberg_b(f, -1)
        act = [_shift(f, p, -1), _lowering(f, p), Matrix.identity(f, p)]
    elif fam == "thm5_2a":
        alpha = f.norm(spec.alpha if spec.alpha is not None else 0)
        h = _two_dim_b(f, 1)
        act = [_shift(f, p, 1), _mat(f, p, lambda c: {c: f.add(alpha, c + 1)})]
    else:  # thm5_2b
        h = _heisenberg_b(f, 1)
        act = [_shift(f, p, 1), _lowering(f, p), Matrix.identity(f, p)]
    labels = _e_labels(p) + h.labels
    return semidirect(h, p, act, spec.variant, labels)


def module_and_complement(spec):
    """The subspaces ``A = span(e_i)`` and ``B = span(x, y[, z])`` of a p-family build."""
    if spec.family not in P_FAMILIES:
        raise PreconditionError(f"{spec.family} has no module/complement split")
    f = spec.validate()
    p = spec.p
    d = p + (3 if spec.family in ("cor_b", "thm5_2b") else 2)
    full = Subspace.full(f, d)
    return (Subspace(f, d, full.basis[:p]), Subspace(f, d, full.basis[p:]))


def is_t_p_minus_t(field, a):
    """Whether ``a = t**p - t`` for some ``t`` in the prime field."""
    a = field.norm(a)
    return any((pow(t, field.p, field.p) - t) % field.p == a for t in field.elements())


def t_p_minus_t_surjective(field):
    """Field condition of the ``thm5_2a`` family: every ``a`` is some ``t**p - t``.

    On GF(p) the map ``t -> t**p - t`` is identically zero, so this is False;
    it is reported as a diagnostic, never enforced.
    """
    return all(is_t_p_minus_t(field, a) for a in field.elements())


def catalog_instances(fields=(GF(2), GF(3)), max_dim=5, max_n=4):
    """Every catalog build over ``fields`` with dimension at most ``max_dim``."""
    out = []
    for f in fields:
        for n in range(1, max_n + 1):
            if n <= max_dim:
                out.append(FamilySpec("abelian", f, n=n))
                if n >= 2:
                    out.append(FamilySpec("cyclic_leibniz", f, n=n))
        out.append(FamilySpec("heisenberg", f))
        if f.is_prime and f.p > 2:
            out.append(FamilySpec("sl2", f))
        if f.is_prime:
            p = f.p
            for variant in ("leibniz", "lie"):
                for fam, extra in (("cor_a", 2), ("cor_b", 3), ("thm5_2b", 3)):
                    if p + extra <= max_dim:
                        out.append(FamilySpec(fam, f, p=p, variant=variant))
                if p + 2 <= max_dim:
                    for alpha in range(p):
                        out.append(FamilySpec("thm5_2a", f, p=p, variant=variant, alpha=alpha))
    return out

