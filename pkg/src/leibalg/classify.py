"""Series, class membership and the nil-ideal machinery.

Lower central series are left-normed, ``L^(k+1) = L L^(k)``; the derived
series uses full products ``S S``.  Triangulability of a subalgebra ``S``
on a module ``M`` is decided operationally as ``S^2 <= nil(S)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (image_of, is_ideal, left_op, preimage,
                      quotient, right_op, subalgebra_as_algebra, subspace_product)
from .errors import InternalError, PreconditionError, RefusalError, UnsupportedFieldError
from .linalg import Matrix, eigenvalues, kernel, projective_points

CLASSES = ("nilpotent", "solvable", "strongly_solvable", "supersolvable")


@dataclass(frozen=True)
class SeriesReport:
    derived: list
    lower_central: list
    derived_reaches_zero: bool
    lower_central_reaches_zero: bool


@dataclass(frozen=True)
class Flag:
    """Chain of ideals ``0 = L_0 < L_1 < ... < L_n = L`` with ``dim L_i = i``."""

    chain: list

    def verify(self, alg):
        if len(self.chain) != alg.dim + 1:
            return False
        prev = None
        for i, term in enumerate(self.chain):
            if term.rank != i or not is_ideal(alg, term):
                return False
            if prev is not None and not term.contains(prev):
                return False
            prev = term
        return True


@dataclass(frozen=True)
class ClassVerdict:
    member: bool
    witness: object = None


def _chain(start, step):
    out = [start]
    cur = start
    while not cur.is_zero():
        nxt = step(cur)
        if nxt == cur:
            break
        out.append(nxt)
        cur = nxt
    return out


def derived_series(alg):
    return _chain(alg.full(), lambda s: subspace_product(alg, s, s))


def lower_central_series(alg):
    full = alg.full()
    return _chain(full, lambda s: subspace_product(alg, full, s))


def series(alg):
    d = derived_series(alg)
    lc = lower_central_series(alg)
    return SeriesReport(d, lc, d[-1].is_zero(), lc[-1].is_zero())


def is_nilpotent(alg):
    return lower_central_series(alg)[-1].is_zero()


def is_solvable(alg):
    return derived_series(alg)[-1].is_zero()


def is_in_class(alg, cls):
    """Membership in one of :data:`CLASSES`, with a witness.

    The witness is the stable nonzero tail of the failing series, or the
    :class:`Flag` when ``cls`` is supersolvable and the algebra is in it.
    """
    if cls == "nilpotent":
        tail = lower_central_series(alg)[-1]
        return ClassVerdict(tail.is_zero(), None if tail.is_zero() else tail)
    if cls == "solvable":
        tail = derived_series(alg)[-1]
        return ClassVerdict(tail.is_zero(), None if tail.is_zero() else tail)
    if cls == "strongly_solvable":
        sq = subspace_product(alg, alg.full(), alg.full())
        sub, inc = subalgebra_as_algebra(alg, sq)
        tail = lower_central_series(sub)[-1]
        if tail.is_zero():
            return ClassVerdict(True)
        return ClassVerdict(False, image_of(inc, tail))
    if cls == "supersolvable":
        flag = supersolvable_flag(alg)
        return ClassVerdict(flag is not None, flag)
    raise PreconditionError(f"unknown class {cls!r}; expected one of {CLASSES}")


def in_class(alg, cls):
    return is_in_class(alg, cls).member


def one_dim_ideals(alg):
    """Spanning vectors of the 1-dimensional ideals, lexicographically sorted.

    A line is a two-sided ideal exactly when it is spanned by a common
    eigenvector of every basis left and right multiplication.  Over GF(p)
    every line of every joint eigenspace is listed; over Q only the echelon
    basis vectors of each joint eigenspace (enough for the flag search,
    since any 1-dimensional ideal can start a flag of a supersolvable
    algebra).
    """
    f = alg.field
    ops = []
    for i in range(alg.dim):
        e = alg.basis_vector(i)
        for op in (left_op(alg, e), right_op(alg, e)):
            if not op.is_zero():
                ops.append(op)
    spaces = [alg.full()]
    for op in ops:
        nxt = []
        for lam in eigenvalues(op):
            eig = kernel(op - Matrix.identity(f, alg.dim).scale(lam))
            for w in spaces:
                cut = w & eig
                if not cut.is_zero():
                    nxt.append(cut)
        spaces = nxt
        if not spaces:
            return []
    vecs = set()
    for w in spaces:
        if f.is_prime:
            vecs.update(projective_points(f, w.basis, alg.dim))
        else:
            vecs.update(w.basis)
    return sorted(vecs)


_FLAG_MEMO = {}


def supersolvable_flag(alg):
    """Depth-first flag search; returns a verified :class:`Flag` or ``None``."""
    flag = _flag_search(alg)
    if flag is not None and not flag.verify(alg):
        raise InternalError("flag search produced a chain that is not a flag of ideals")
    return flag


def _flag_search(alg):
    key = (alg.field, alg.dim, alg.tensor)
    if key in _FLAG_MEMO:
        return _FLAG_MEMO[key]
    result = None
    if alg.dim == 0:
        result = Flag([alg.zero()])
    else:
        for v in one_dim_ideals(alg):
            z = alg.span([v])
            q, proj = quotient(alg, z)
            sub = _flag_search(q)
            if sub is not None:
                result = Flag([alg.zero()] + [preimage(alg, proj, z, t) for t in sub.chain])
                break
    _FLAG_MEMO[key] = result
    return result


def leib_ideal(alg):
    """Span of all squares, via ``e_i e_i`` and ``(e_i + e_j)^2``."""
    from .algebra import multiply
    d = alg.dim
    vecs = []
    for i in range(d):
        vecs.append(alg.tensor[i][i])
        for j in range(i + 1, d):
            s = tuple(alg.field.add(a, b) for a, b in zip(alg.basis_vector(i), alg.basis_vector(j)))
            vecs.append(multiply(alg, s, s))
    return alg.span(vecs)


def centralizer(alg, a):
    """``{x : x b = 0 = b x for all b in a}``."""
    if a.dim != alg.dim:
        raise PreconditionError("subspace and algebra dimension differ")
    rows = []
    for b in a.basis:
        rows.extend(right_op(alg, b).rows)
        rows.extend(left_op(alg, b).rows)
    return kernel(Matrix(alg.field, tuple(rows), alg.dim))


def center(alg):
    return centralizer(alg, alg.full())


def acts_nilpotently(alg, s, m):
    """Whether ``m > s m > s(s m) > ...`` reaches zero; requires ``s m <= m``."""
    step = subspace_product(alg, s, m)
    if not m.contains(step):
        raise PreconditionError("s does not map m into itself")
    cur = m
    while not cur.is_zero():
        nxt = subspace_product(alg, s, cur)
        if nxt == cur:
            return False
        cur = nxt
    return True


def nil_ideal(alg, s, m, budget=None):
    """Largest ideal of the subalgebra ``s`` acting nilpotently on ``m``.

    Computed as the sum of every ideal of ``s`` (exhaustive enumeration,
    finite fields only) that acts nilpotently; the sum is re-checked.
    """
    from .lattice import enumerate_subspaces
    if not alg.field.is_prime:
        raise UnsupportedFieldError("nil ideal needs exhaustive enumeration; unsupported over Q")
    if not m.contains(subspace_product(alg, s, m)):
        raise PreconditionError("s does not map m into itself")
    sub, inc = subalgebra_as_algebra(alg, s)
    total = alg.zero()
    for j in enumerate_subspaces(sub, "ideals", budget):
        jl = image_of(inc, j)
        if total.contains(jl):
            continue
        if acts_nilpotently(alg, jl, m):
            total = total + jl
    if not acts_nilpotently(alg, total, m):
        raise InternalError("sum of nilpotently acting ideals does not act nilpotently")
    return total


def is_triangulable(alg, s, m, budget=None):
    return nil_ideal(alg, s, m, budget).contains(subspace_product(alg, s, s))


@dataclass
class ClassReport:
    series: SeriesReport
    classes: dict
    flag: Flag | None
    leib: object
    center: object
    centralizer_of_leib: object
    nilradical: object = None
    frattini: object = None
    socle: object = None
    refusals: dict = dc_field(default_factory=dict)


def analyze(alg, budget=None, lattice=True):
    """Everything cheap, plus lattice-backed ideals when the budget allows."""
    from . import lattice as lat
    classes = {c: is_in_class(alg, c) for c in CLASSES}
    leib = leib_ideal(alg)
    report = ClassReport(series=series(alg),
                         classes={c: v.member for c, v in classes.items()},
                         flag=classes["supersolvable"].witness,
                         leib=leib, center=center(alg),
                         centralizer_of_leib=centralizer(alg, leib))
    if lattice:
        for name, fn in (("nilradical", lat.nilradical),
                         ("frattini", lat.frattini),
                         ("socle", lat.socle)):
            try:
                setattr(report, name, fn(alg, budget))
            except RefusalError as exc:
                report.refusals[name] = str(exc)
    return report


def lie_quotient(alg):
    """``L / Leib(L)``, the canonical Lie quotient."""
    q, proj = quotient(alg, leib_ideal(alg))
    return q, proj
