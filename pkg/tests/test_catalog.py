import pytest

from leibalg import algebra as ac
from leibalg import classify as cl
from leibalg import lattice as lt
from leibalg.catalog import (FamilySpec, build, catalog_instances, is_t_p_minus_t,
                             module_and_complement, semidirect, t_p_minus_t_surjective)
from leibalg.errors import PreconditionError
from leibalg.exactfield import GF, Q
from leibalg.linalg import Matrix


def products(alg):
    return {(alg.label(i), alg.label(j)): {alg.label(k): c for k, c in enumerate(v) if c}
            for i, j, v in alg.nonzero_products()}


def test_cor_a_table(cor_a3):
    assert cor_a3.dim == 5
    # x e_i = -e_{i+1}, y e_i = -i e_i, and yx = -x, xy = x so that the identity holds
    assert products(cor_a3) == {
        ("x", "e1"): {"e2": 2}, ("x", "e2"): {"e3": 2}, ("x", "e3"): {"e1": 2},
        ("y", "e1"): {"e1": 2}, ("y", "e2"): {"e2": 1},
        ("y", "x"): {"x": 2}, ("x", "y"): {"x": 1},
    }


def test_printed_sign_of_yx_fails_the_identity():
    """With the negated actions, yx = +x violates the left Leibniz identity for odd p."""
    f = GF(3)
    h = ac.Algebra.from_products(f, 2, {(1, 0): {0: 1}, (0, 1): {0: -1}}, ("x", "y"))
    shift = Matrix.from_columns(f, [(0, 2, 0), (0, 0, 2), (2, 0, 0)], 3)
    diag = Matrix.from_rows(f, [[2, 0, 0], [0, 1, 0], [0, 0, 0]])
    with pytest.raises(PreconditionError):
        semidirect(h, 3, [shift, diag])


def test_cor_b_lie_over_gf2():
    alg = build(FamilySpec("cor_b", GF(2), p=2, variant="lie"))
    assert alg.dim == 5 and ac.check_lie(alg)[0]
    t = products(alg)
    assert t[("y", "x")] == {"z": 1}
    assert t[("z", "e1")] == {"e1": 1} and t[("z", "e2")] == {"e2": 1}
    assert t[("e1", "z")] == {"e1": 1}


def test_thm5_2a_table():
    alg = build(FamilySpec("thm5_2a", GF(3), p=3, variant="lie", alpha=0))
    t = products(alg)
    assert t[("y", "e1")] == {"e1": 1} and t[("y", "e2")] == {"e2": 2}
    assert ("y", "e3") not in t
    assert t[("x", "e1")] == {"e2": 1} and t[("x", "e3")] == {"e1": 1}
    assert t[("y", "x")] == {"x": 1}
    alg = build(FamilySpec("thm5_2a", GF(3), p=3, alpha=1))
    assert products(alg)[("y", "e3")] == {"e3": 1}


def test_small_builders():
    assert not any(c for row in build(FamilySpec("abelian", Q, n=3)).tensor for v in row for c in v)
    cyc = build(FamilySpec("cyclic_leibniz", GF(3), n=2))
    assert list(cyc.nonzero_products()) == [(0, 0, (0, 1))]
    assert lt.is_simple(build(FamilySpec("sl2", GF(5))))


def test_semidirect_examples():
    f = Q
    x = ac.Algebra.zero_algebra(f, 1, ("x",))
    alg = semidirect(x, 1, [Matrix.identity(f, 1)])
    assert alg.tensor[1][0] == (1, 0) and alg.tensor[0][1] == (0, 0)
    assert cl.is_solvable(alg) and not ac.check_lie(alg)[0]
    direct = semidirect(x, 2, [Matrix.zeros(f, 2, 2)])
    assert not any(c for row in direct.tensor for v in row for c in v)


def test_semidirect_rejects_bad_action():
    f = Q
    h = build(FamilySpec("heisenberg", f))
    ident = Matrix.identity(f, 1)
    with pytest.raises(PreconditionError):
        semidirect(h, 1, [ident, ident, ident])


@pytest.mark.parametrize("spec", [
    FamilySpec("cor_a", GF(5), p=3),
    FamilySpec("cor_a"),
    FamilySpec("cor_a", p=4),
    FamilySpec("heisenberg", GF(3), alpha=1),
    FamilySpec("abelian", GF(3)),
    FamilySpec("nope", GF(3)),
    FamilySpec("cor_a", p=3, variant="assoc"),
])
def test_invalid_specs(spec):
    with pytest.raises((PreconditionError, ValueError)):
        build(spec)


def test_every_build_is_leibniz():
    for spec in catalog_instances((GF(2), GF(3), GF(5)), max_dim=7):
        alg = build(spec)
        assert ac.check_leibniz(alg)[0], spec
        if spec.variant == "lie" and spec.family.startswith(("cor", "thm")):
            assert ac.check_lie(alg)[0]


@pytest.mark.parametrize("fam", ["cor_a", "cor_b"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_leib_is_module_and_annihilates(fam, p):
    spec = FamilySpec(fam, p=p)
    alg = build(spec)
    a, _ = module_and_complement(spec)
    assert cl.leib_ideal(alg) == a
    assert ac.subspace_product(alg, a, alg.full()).is_zero()


@pytest.mark.parametrize("fam,p", [("cor_a", 2), ("cor_a", 3), ("cor_b", 2), ("cor_b", 3)])
def test_module_is_unique_minimal_ideal(fam, p):
    spec = FamilySpec(fam, p=p)
    alg = build(spec)
    a, _ = module_and_complement(spec)
    assert lt.minimal_ideals(alg) == [a]
    assert a.rank == p >= 2
    assert ac.subspace_product(alg, a, a).is_zero()


def test_field_condition_diagnostic():
    for p in (2, 3, 5, 7):
        f = GF(p)
        assert is_t_p_minus_t(f, 0)
        assert not any(is_t_p_minus_t(f, a) for a in range(1, p))
        assert not t_p_minus_t_surjective(f)
