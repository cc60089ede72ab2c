"""Brute-force oracles that stay independent of the main code paths.

``leibniz_tensors_gf2`` sweeps every structure tensor of a small dimension
over GF(2) with numpy and keeps those satisfying the left Leibniz identity
in its operator form ``[L_i, L_j] = L_{e_i e_j}``.  ``brute_force_flag``
searches chains of ideals directly in the lattice of all subspaces, with
no quotients and no eigenvectors.
"""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np

from .algebra import Algebra, is_ideal
from .exactfield import GF
from .lattice import all_subspaces


def _bits_to_matrix(code, d):
    return np.array([[(code >> (r * d + c)) & 1 for c in range(d)] for r in range(d)],
                    dtype=np.int64)


@lru_cache(maxsize=None)
def leibniz_tensors_gf2(d):
    """All Leibniz structure tensors of dimension ``d`` over GF(2), as algebras.

    A left-multiplication matrix ``L_i`` is packed as ``d*d`` bits, bit
    ``r*d + c`` holding row ``r``, column ``c``; column ``j`` of ``L_i`` is
    the product ``e_i e_j``.
    """
    f = GF(2)
    if d == 0:
        return (Algebra.zero_algebra(f, 0),)
    nm = 1 << (d * d)
    mats = np.stack([_bits_to_matrix(a, d) for a in range(nm)])
    weights = (1 << np.arange(d * d, dtype=np.int64)).reshape(d, d)
    prod = np.einsum("aij,bjk->abik", mats, mats) % 2
    mul = (prod * weights).sum(axis=(2, 3))
    pairs = [(i, i) for i in range(d)] + [(i, j) for i in range(d) for j in range(d) if i != j]
    rest = np.array(np.meshgrid(*([np.arange(nm)] * (d - 1)), indexing="ij")).reshape(d - 1, -1) \
        if d > 1 else np.zeros((0, 1), dtype=np.int64)
    found = []
    for first in range(nm):
        ls = [np.full(rest.shape[1], first, dtype=np.int64)] + [rest[k] for k in range(d - 1)]
        for i, j in pairs:
            lhs = mul[ls[i], ls[j]] ^ mul[ls[j], ls[i]]
            rhs = np.zeros_like(lhs)
            for k in range(d):
                bit = (ls[i] >> (k * d + j)) & 1
                rhs ^= (-bit) & ls[k]
            keep = lhs == rhs
            ls = [x[keep] for x in ls]
            if ls[0].size == 0:
                break
        for combo in zip(*(x.tolist() for x in ls)):
            found.append(combo)
    algs = []
    for combo in found:
        tensor = tuple(
            tuple(tuple((combo[i] >> (k * d + j)) & 1 for k in range(d)) for j in range(d))
            for i in range(d))
        algs.append(Algebra(f, d, tensor))
    algs.sort(key=lambda a: a.tensor)
    return tuple(algs)


def random_leibniz_gf2(count, max_dim=3, seed=0):
    """``count`` seeded uniform draws of Leibniz tensors with dimension in ``1..max_dim``.

    Drawing uniformly from the swept set is the same distribution as drawing
    uniform random tensors and rejecting those failing the Leibniz identity.
    """
    rng = random.Random(seed)
    pools = {d: leibniz_tensors_gf2(d) for d in range(1, max_dim + 1)}
    return [rng.choice(pools[rng.randint(1, max_dim)]) for _ in range(count)]


def brute_force_flag(alg):
    """First full chain of ideals ``0 < I_1 < ... < I_n`` found by plain search, or None."""
    ideals = [s for s in all_subspaces(alg.field, alg.dim) if is_ideal(alg, s)]
    by_dim = {}
    for s in ideals:
        by_dim.setdefault(s.rank, []).append(s)

    def extend(chain):
        if len(chain) == alg.dim + 1:
            return chain
        for nxt in by_dim.get(len(chain), []):
            if nxt.contains(chain[-1]):
                out = extend(chain + [nxt])
                if out:
                    return out
        return None

    return extend([alg.zero()])
