"""Companion Lie algebra of a Leibniz algebra split as ``L = A + H``.

Everything is expressed in the adapted basis: the echelon basis of ``A``
followed by the echelon basis of ``H``.  On that basis the companion
bracket is ``[a + h, b + k] = h b - k a + h k`` with the products on the
right taken in ``L``; the reverse construction keeps ``H`` and its left
action on ``A`` and sets ``A L = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (Algebra, change_basis, check_leibniz, check_lie, is_ideal,
                      is_subalgebra, subalgebra_as_algebra, subspace_product)
from .classify import leib_ideal
from .errors import InternalError, PreconditionError
from .lattice import complement, minimal_ideals
from .linalg import Subspace


@dataclass(frozen=True)
class Decomposition:
    a: Subspace
    h: Subspace

    @property
    def direct(self):
        return (self.a & self.h).is_zero() and (self.a + self.h).is_full()

    def validate(self, alg):
        if not self.direct:
            raise PreconditionError("A and H do not form a direct sum decomposition")
        if not is_ideal(alg, self.a):
            raise PreconditionError("A is not an ideal")
        if not is_subalgebra(alg, self.h):
            raise PreconditionError("H is not a subalgebra")

    def adapted_basis(self):
        return list(self.a.basis) + list(self.h.basis)

    def adapted(self):
        """The same decomposition written in adapted coordinates."""
        f, d, k = self.a.field, self.a.dim, self.a.rank
        full = Subspace.full(f, d)
        return Decomposition(Subspace(f, d, full.basis[:k]), Subspace(f, d, full.basis[k:]))


def decompose(alg, budget=None):
    """Unique minimal ideal ``A`` and the first complementing subalgebra ``H``."""
    mins = minimal_ideals(alg, budget)
    if len(mins) != 1:
        raise PreconditionError(f"expected a unique minimal ideal, found {len(mins)}")
    a = mins[0]
    h = complement(alg, a, budget)
    if h is None:
        raise PreconditionError(f"minimal ideal {a} has no complementing subalgebra")
    return Decomposition(a, h)


def _adapted_pieces(alg, dec):
    basis = dec.adapted_basis()
    k = dec.a.rank
    adapted = change_basis(alg, basis)
    if basis == [alg.basis_vector(i) for i in range(alg.dim)]:
        adapted = Algebra(adapted.field, adapted.dim, adapted.tensor, alg.labels)
    return basis, k, adapted


def _algebra_from(field, d, fn, labels=None):
    tensor = tuple(tuple(fn(i, j) for j in range(d)) for i in range(d))
    return Algebra(field, d, tensor, labels)


def companion_lie(alg, dec):
    dec.validate(alg)
    h_alg = subalgebra_as_algebra(alg, dec.h)[0]
    if not check_lie(h_alg)[0]:
        raise PreconditionError("H is not a Lie algebra")
    _, k, adapted = _adapted_pieces(alg, dec)
    if check_lie(alg)[0]:
        return adapted
    if not leib_ideal(alg).contains(dec.a):
        raise PreconditionError("A is not contained in Leib(L)")
    f = alg.field
    d = alg.dim
    t = adapted.tensor
    zero = adapted.zero_vector

    def bracket(i, j):
        if i < k and j < k:
            return zero
        if i >= k and j < k:
            return t[i][j]
        if i < k and j >= k:
            return tuple(f.neg(x) for x in t[j][i])
        return t[i][j]

    c = _algebra_from(f, d, bracket, adapted.labels)
    ok, wit = check_lie(c)
    if not ok:
        raise PreconditionError(
            f"companion bracket is not Lie ({wit.kind} fails at {wit.indices}); "
            "input is outside the companion construction's hypotheses")
    return c


def leibnizize(lie, dec):
    """Leibniz algebra with ``H`` products and ``h a`` kept from ``lie`` and ``A L = 0``."""
    if not check_lie(lie)[0]:
        raise PreconditionError("input is not a Lie algebra")
    dec.validate(lie)
    if not subspace_product(lie, dec.a, dec.a).is_zero():
        raise PreconditionError("A is not abelian")
    _, k, adapted = _adapted_pieces(lie, dec)
    t = adapted.tensor
    zero = adapted.zero_vector
    out = _algebra_from(lie.field, lie.dim, lambda i, j: zero if i < k else t[i][j],
                        adapted.labels)
    ok, wit = check_leibniz(out)
    if not ok:
        raise InternalError(f"leibnizized algebra fails the Leibniz identity at {wit.indices}")
    return out


def in_adapted_basis(alg, dec):
    return change_basis(alg, dec.adapted_basis())


__all__ = ["Decomposition", "companion_lie", "decompose", "in_adapted_basis", "leibnizize"]
