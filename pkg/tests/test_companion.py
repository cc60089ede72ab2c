import pytest

from leibalg import algebra as ac
from leibalg import lattice as lt
from leibalg.catalog import FamilySpec, build, module_and_complement
from leibalg.companion import Decomposition, companion_lie, decompose, in_adapted_basis, leibnizize
from leibalg.errors import PreconditionError
from leibalg.exactfield import GF, Q
from leibalg.linalg import operator_nilpotent

ROUND_TRIP = [FamilySpec("cor_a", p=2), FamilySpec("cor_a", p=3), FamilySpec("cor_b", p=2),
              FamilySpec("cor_b", p=3), FamilySpec("thm5_2a", p=3, alpha=1),
              FamilySpec("thm5_2b", p=2)]


def split(spec):
    return Decomposition(*module_and_complement(spec))


def test_decompose_examples(cor_a3):
    dec = decompose(cor_a3)
    assert dec.a == cor_a3.span([cor_a3.basis_vector(i) for i in range(3)])
    assert dec.h == cor_a3.span([cor_a3.basis_vector(3), cor_a3.basis_vector(4)])
    with pytest.raises(PreconditionError, match="found 3"):
        decompose(build(FamilySpec("abelian", GF(2), n=2)))
    with pytest.raises(PreconditionError, match="no complement"):
        decompose(build(FamilySpec("cyclic_leibniz", GF(3), n=2)))


def test_companion_of_cor_a(cor_a3):
    c = companion_lie(cor_a3, decompose(cor_a3))
    assert ac.check_lie(c)[0]
    e1, e2, x, y = (c.basis_vector(i) for i in (0, 1, 3, 4))
    assert ac.multiply(c, x, e1) == (0, 2, 0, 0, 0)     # x e1 = -e2
    assert ac.multiply(c, e1, x) == e2
    assert ac.multiply(c, y, e1) == (2, 0, 0, 0, 0)     # y e1 = -e1
    assert ac.multiply(c, y, x) == (0, 0, 0, 2, 0)


def test_companion_of_cor_b():
    alg = build(FamilySpec("cor_b", p=2))
    dec = decompose(alg)
    c = companion_lie(alg, dec)
    assert ac.check_lie(c)[0]
    h, _ = ac.subalgebra_as_algebra(c, dec.h)
    assert h.tensor == ac.subalgebra_as_algebra(alg, dec.h)[0].tensor


def test_lie_input_passes_through():
    spec = FamilySpec("cor_a", p=3, variant="lie")
    lie = build(spec)
    assert companion_lie(lie, split(spec)).tensor == lie.tensor
    heis = build(FamilySpec("heisenberg", Q))
    z, xy = heis.span([heis.basis_vector(2)]), heis.span([heis.basis_vector(0), heis.basis_vector(1)])
    with pytest.raises(PreconditionError):
        companion_lie(heis, Decomposition(z, xy))


def test_leibnizize_examples():
    ab = build(FamilySpec("abelian", GF(3), n=2))
    dec = Decomposition(ab.span([ab.basis_vector(0)]), ab.span([ab.basis_vector(1)]))
    assert leibnizize(ab, dec).tensor == ab.tensor
    spec = FamilySpec("cor_a", p=3)
    lie = build(FamilySpec("cor_a", p=3, variant="lie"))
    assert leibnizize(lie, split(spec)).tensor == build(spec).tensor


def test_non_lie_h_rejected():
    # abelian line plus a copy of the two-dimensional cyclic algebra
    alg = ac.Algebra.from_products(GF(3), 3, {(1, 1): {2: 1}})
    a = alg.span([alg.basis_vector(0)])
    h = alg.span([alg.basis_vector(1), alg.basis_vector(2)])
    with pytest.raises(PreconditionError, match="H is not a Lie algebra"):
        companion_lie(alg, Decomposition(a, h))


@pytest.mark.parametrize("spec", ROUND_TRIP, ids=str)
def test_round_trip(spec):
    alg = build(spec)
    dec = split(spec)
    comp = companion_lie(alg, dec)
    back = leibnizize(comp, dec.adapted())
    assert back.tensor == in_adapted_basis(alg, dec).tensor


@pytest.mark.parametrize("spec", ROUND_TRIP, ids=str)
def test_companion_agrees_blockwise(spec):
    alg = build(spec)
    dec = split(spec)
    c = companion_lie(alg, dec)
    k, d, f = dec.a.rank, alg.dim, alg.field
    for i in range(d):
        for j in range(d):
            if i < k and j < k:
                assert not any(c.tensor[i][j])
            elif i < k:
                assert c.tensor[i][j] == tuple(f.neg(x) for x in alg.tensor[j][i])
            else:
                assert c.tensor[i][j] == alg.tensor[i][j]


@pytest.mark.parametrize("spec", ROUND_TRIP, ids=str)
def test_nilpotency_of_left_multiplications_matches(spec):
    alg = build(spec)
    dec = split(spec)
    c = companion_lie(alg, dec)
    h2 = ac.subspace_product(alg, dec.h, dec.h)
    for v in list(h2.basis) + list(dec.a.basis):
        assert operator_nilpotent(ac.left_op(alg, v)) == operator_nilpotent(ac.left_op(c, v))


@pytest.mark.parametrize("fam,p", [("cor_a", 2), ("cor_a", 3), ("cor_b", 2)])
def test_companion_shares_structure(fam, p):
    alg = build(FamilySpec(fam, p=p))
    dec = decompose(alg)
    c = companion_lie(alg, dec)
    assert c.dim == alg.dim
    assert ac.is_ideal(c, dec.a) and ac.is_subalgebra(c, dec.h)
    assert lt.minimal_ideals(c) == [dec.a]
    assert lt.frattini(c).Phi.is_zero()
