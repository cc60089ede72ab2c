"""Exhaustive subspace lattices over GF(p) and what they decide.

Subspaces are streamed by dimension, then lexicographically by echelon
basis, so every "first such subspace" answer is deterministic.  Before any
scan the total number of subspaces of ``F^d`` (a sum of Gaussian binomials)
is compared against the budget and oversized jobs are refused up front.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .algebra import (generated_subalgebra, image_of, is_ideal, is_subalgebra,
                      subalgebra_as_algebra, subspace_product)
from .classify import CLASSES, in_class, is_nilpotent
from .errors import BudgetExceeded, InternalError, PreconditionError, UnsupportedFieldError
from .linalg import Subspace, projective_points

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class EnumerationBudget:
    max_subspaces: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_subspaces <= 0:
            raise PreconditionError("budget must be positive")


def _budget(budget):
    if budget is None:
        return EnumerationBudget()
    if isinstance(budget, int):
        return EnumerationBudget(budget)
    return budget


def gaussian_binomial(n, k, q):
    """Number of ``k``-dimensional subspaces of ``GF(q)^n``."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(n, q):
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def check_budget(field, dim, budget=None):
    if not field.is_prime:
        raise UnsupportedFieldError("subspace enumeration needs a finite field")
    count = subspace_count(dim, field.p)
    limit = _budget(budget).max_subspaces
    if count > limit:
        raise BudgetExceeded(count, limit)
    return count


@lru_cache(maxsize=64)
def subspaces_of_dim(field, n, k):
    """All ``k``-dimensional subspaces of ``F^n`` in canonical order."""
    elems = list(field.elements())
    out = []
    for pivots in combinations(range(n), k):
        pset = set(pivots)
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pset]
        for vals in product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(free, vals):
                rows[r][c] = x
            out.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    out.sort(key=lambda s: s.basis)
    return tuple(out)


def all_subspaces(field, n, budget=None):
    check_budget(field, n, budget)
    for k in range(n + 1):
        yield from subspaces_of_dim(field, n, k)


def enumerate_subspaces(alg, kind="subspaces", budget=None):
    """Stream subspaces, subalgebras, ideals or maximal subalgebras of ``alg``."""
    check_budget(alg.field, alg.dim, budget)
    if kind == "maximal_subalgebras":
        yield from maximal_subalgebras(alg, budget)
        return
    test = {"subspaces": None, "subalgebras": is_subalgebra, "ideals": is_ideal}
    if kind not in test:
        raise PreconditionError(f"unknown enumeration kind {kind!r}")
    fn = test[kind]
    for s in all_subspaces(alg.field, alg.dim, budget):
        if fn is None or fn(alg, s):
            yield s


def _is_maximal(alg, s):
    # every v outside s, up to scaling and modulo s, must generate everything with s
    f = alg.field
    piv = set(s.pivots)
    free = [j for j in range(alg.dim) if j not in piv]
    unit = [alg.basis_vector(j) for j in free]
    for v in projective_points(f, unit, alg.dim):
        if not generated_subalgebra(alg, list(s.basis) + [v]).is_full():
            return False
    return True


def maximal_subalgebras(alg, budget=None):
    check_budget(alg.field, alg.dim, budget)
    out = []
    for s in all_subspaces(alg.field, alg.dim, budget):
        if s.is_full():
            continue
        if is_subalgebra(alg, s) and _is_maximal(alg, s):
            out.append(s)
    return out


@dataclass(frozen=True)
class FrattiniResult:
    F: Subspace
    Phi: Subspace
    phi_free: bool


def frattini(alg, budget=None):
    """Frattini subalgebra (intersection of maximal subalgebras) and ideal."""
    fsub = alg.full()
    for m in maximal_subalgebras(alg, budget):
        fsub = fsub & m
    phi = alg.zero()
    for k in range(fsub.rank + 1):
        for s in subspaces_of_dim(alg.field, alg.dim, k):
            if fsub.contains(s) and not phi.contains(s) and is_ideal(alg, s):
                phi = phi + s
    if not is_ideal(alg, phi):
        raise InternalError("sum of ideals inside F(L) is not an ideal")
    return FrattiniResult(fsub, phi, phi.is_zero())


def ideals(alg, budget=None):
    return list(enumerate_subspaces(alg, "ideals", budget))


def minimal_ideals(alg, budget=None):
    found = []
    for s in enumerate_subspaces(alg, "ideals", budget):
        if s.is_zero():
            continue
        if not any(s.contains(m) for m in found):
            found.append(s)
    return found


def socle(alg, budget=None):
    total = alg.zero()
    for m in minimal_ideals(alg, budget):
        total = total + m
    return total


def complement(alg, a, budget=None):
    """First subalgebra ``H`` with ``H & a = 0`` and ``H + a = L``, or ``None``."""
    if not is_ideal(alg, a):
        raise PreconditionError("complement needs an ideal")
    check_budget(alg.field, alg.dim, budget)
    for h in subspaces_of_dim(alg.field, alg.dim, alg.dim - a.rank):
        if (h & a).is_zero() and is_subalgebra(alg, h):
            return h
    return None


def nilradical(alg, budget=None):
    total = alg.zero()
    for s in enumerate_subspaces(alg, "ideals", budget):
        if total.contains(s):
            continue
        if is_nilpotent(subalgebra_as_algebra(alg, s)[0]):
            total = total + s
    if not is_nilpotent(subalgebra_as_algebra(alg, total)[0]):
        raise InternalError("sum of nilpotent ideals is not nilpotent")
    return total


def is_simple(alg, budget=None):
    if alg.dim == 0 or subspace_product(alg, alg.full(), alg.full()).is_zero():
        return False
    for s in enumerate_subspaces(alg, "ideals", budget):
        if not s.is_zero() and not s.is_full():
            return False
    return True


@dataclass(frozen=True)
class MinimalityVerdict:
    in_class: bool
    verdict: str
    failing_subalgebra: Subspace | None = None


def minimal_non_class(alg, cls, budget=None):
    """Whether ``alg`` is outside ``cls`` while all its maximal subalgebras are inside.

    All four classes are closed under subalgebras, so checking maximal
    subalgebras covers every proper one.
    """
    if cls not in CLASSES:
        raise PreconditionError(f"unknown class {cls!r}")
    check_budget(alg.field, alg.dim, budget)
    if in_class(alg, cls):
        return MinimalityVerdict(True, "in_class")
    for m in maximal_subalgebras(alg, budget):
        if not in_class(subalgebra_as_algebra(alg, m)[0], cls):
            return MinimalityVerdict(False, "not_minimal", m)
    return MinimalityVerdict(False, "minimally_non_class")


@dataclass(frozen=True)
class TwoGeneration:
    """``result`` is True, False, or None when a scan over Q was inconclusive."""

    result: bool | None
    pair: tuple | None = None


GRID = (-2, -1, 0, 1, 2)


def is_two_generated(alg, budget=None):
    f = alg.field
    full = alg.full()
    sq = subspace_product(alg, full, full)
    # generated subalgebras of {u, v} lie in span(u, v) + L^2
    if alg.dim - sq.rank > 2:
        return TwoGeneration(False)
    limit = _budget(budget).max_subspaces
    if f.is_prime:
        cands = projective_points(f, [alg.basis_vector(j) for j in range(alg.dim)], alg.dim)
    else:
        cands = [tuple(f.norm(x) for x in v) for v in product(GRID, repeat=alg.dim) if any(v)]
    n = len(cands)
    pairs = n * (n + 1) // 2
    if pairs > limit:
        raise BudgetExceeded(pairs, limit, "generator pairs")
    zero = alg.zero_vector
    for i, u in enumerate(cands):
        if generated_subalgebra(alg, [u]).is_full():
            return TwoGeneration(True, (u, zero))
        for v in cands[i + 1:]:
            if generated_subalgebra(alg, [u, v]).is_full():
                return TwoGeneration(True, (u, v))
    if alg.dim == 0:
        return TwoGeneration(True, (zero, zero))
    return TwoGeneration(False if f.is_prime else None)


def two_generated_subalgebras(alg, budget=None):
    """Every subalgebra generated by at most two elements (finite fields)."""
    check_budget(alg.field, alg.dim, budget)
    f = alg.field
    cands = [alg.zero_vector] + projective_points(
        f, [alg.basis_vector(j) for j in range(alg.dim)], alg.dim)
    seen = set()
    for i, u in enumerate(cands):
        for v in cands[i:]:
            seen.add(generated_subalgebra(alg, [u, v]))
    return sorted(seen, key=Subspace.sort_key)


def ideals_of_subalgebra(alg, s, budget=None):
    """Ideals of ``s`` viewed as an algebra, returned as subspaces of ``alg``."""
    sub, inc = subalgebra_as_algebra(alg, s)
    return [image_of(inc, j) for j in enumerate_subspaces(sub, "ideals", budget)]


__all__ = [
    "DEFAULT_BUDGET", "EnumerationBudget", "FrattiniResult", "MinimalityVerdict",
    "TwoGeneration", "all_subspaces", "check_budget", "complement", "enumerate_subspaces",
    "frattini", "gaussian_binomial", "ideals", "ideals_of_subalgebra", "is_simple",
    "is_two_generated", "maximal_subalgebras", "minimal_ideals", "minimal_non_class",
    "nilradical", "socle", "subspace_count", "subspaces_of_dim", "two_generated_subalgebras",
]
