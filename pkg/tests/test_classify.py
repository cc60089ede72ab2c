import pytest

from leibalg import algebra as ac
from leibalg import classify as cl
from leibalg import lattice as lt
from leibalg.catalog import FamilySpec, build, catalog_instances
from leibalg.errors import PreconditionError, UnsupportedFieldError
from leibalg.exactfield import GF, Q
from leibalg.oracles import brute_force_flag, random_leibniz_gf2
from leibalg.suite import nil_sum_pairs, nil_quotient_holds, random_leibniz


def span_of(alg, *idx):
    return alg.span([alg.basis_vector(i) for i in idx])


def test_series_examples(heisq, cyc3):
    ab = build(FamilySpec("abelian", Q, n=3))
    rep = cl.series(ab)
    assert rep.derived == [ab.full(), ab.zero()]
    assert rep.lower_central == [ab.full(), ab.zero()]
    assert cl.lower_central_series(heisq) == [heisq.full(), span_of(heisq, 2), heisq.zero()]
    assert cl.derived_series(cyc3) == [cyc3.full(), span_of(cyc3, 1), cyc3.zero()]


def test_series_stop_at_nonzero_fixed_point(cor_a3):
    rep = cl.series(cor_a3)
    assert rep.derived_reaches_zero and not rep.lower_central_reaches_zero
    assert rep.lower_central[-1] == span_of(cor_a3, 0, 1, 2, 3)


def test_heisenberg_classes(heis2):
    assert cl.in_class(heis2, "nilpotent")
    v = cl.is_in_class(heis2, "supersolvable")
    assert v.member and v.witness.verify(heis2)
    assert v.witness.chain[1] == span_of(heis2, 2)


def test_cor_a_classes(cor_a3):
    assert cl.in_class(cor_a3, "solvable")
    v = cl.is_in_class(cor_a3, "strongly_solvable")
    assert not v.member and v.witness == span_of(cor_a3, 0, 1, 2)
    assert not cl.in_class(cor_a3, "supersolvable")
    assert cl.supersolvable_flag(cor_a3) is None
    h, _ = ac.subalgebra_as_algebra(cor_a3, span_of(cor_a3, 3, 4))
    assert cl.in_class(h, "supersolvable")


def test_flag_of_square_starts_with_shift_eigenvector(cor_a3):
    sq = span_of(cor_a3, 0, 1, 2, 3)
    sub, inc = ac.subalgebra_as_algebra(cor_a3, sq)
    flag = cl.supersolvable_flag(sub)
    assert flag is not None and flag.verify(sub)
    assert ac.image_of(inc, flag.chain[1]) == cor_a3.span([(1, 1, 1, 0, 0)])


def test_unknown_class():
    with pytest.raises(PreconditionError):
        cl.is_in_class(build(FamilySpec("abelian", Q, n=1)), "perfect")


def test_abelian_flag_is_coordinate_flag():
    ab = build(FamilySpec("abelian", GF(3), n=3))
    flag = cl.supersolvable_flag(ab)
    assert flag.verify(ab)


def test_leib_and_centralizers(cyc3, heisq, cor_a3):
    assert cl.leib_ideal(heisq).is_zero()
    assert cl.leib_ideal(cyc3) == span_of(cyc3, 1)
    a = span_of(cor_a3, 0, 1, 2)
    assert cl.leib_ideal(cor_a3) == a
    ab = build(FamilySpec("abelian", Q, n=2))
    assert cl.centralizer(ab, ab.full()).is_full()
    assert cl.center(heisq) == span_of(heisq, 2)
    assert cl.centralizer(cor_a3, a) == a


def test_acts_nilpotently_examples(heisq, cor_a3):
    assert cl.acts_nilpotently(heisq, heisq.zero(), heisq.full())
    assert cl.acts_nilpotently(heisq, heisq.full(), heisq.full())
    assert not cl.acts_nilpotently(cor_a3, span_of(cor_a3, 3), span_of(cor_a3, 0, 1, 2))
    with pytest.raises(PreconditionError):
        cl.acts_nilpotently(heisq, span_of(heisq, 0), span_of(heisq, 1))


def test_nil_ideal_examples(cor_a3):
    h3 = build(FamilySpec("heisenberg", GF(3)))
    assert cl.nil_ideal(h3, h3.full(), h3.full()).is_full()
    assert cl.nil_ideal(cor_a3, cor_a3.full(), cor_a3.full()) == span_of(cor_a3, 0, 1, 2)
    yz = span_of(h3, 1, 2)
    assert cl.nil_ideal(h3, yz, h3.full()) == yz


def test_nil_ideal_unsupported_over_q(heisq):
    with pytest.raises(UnsupportedFieldError):
        cl.nil_ideal(heisq, heisq.full(), heisq.full())


def test_triangulable_examples(cor_a3):
    full = cor_a3.full()
    assert not cl.is_triangulable(cor_a3, full, full)
    h = span_of(cor_a3, 3, 4)
    # H is strongly solvable as an algebra but not triangulable on L
    assert cl.is_triangulable(cor_a3, h, h)
    assert not cl.is_triangulable(cor_a3, h, full)
    for spec in catalog_instances((GF(2), GF(3)), max_dim=4):
        alg = build(spec)
        if cl.in_class(alg, "strongly_solvable"):
            assert cl.is_triangulable(alg, alg.full(), alg.full())


def sample():
    algs = [build(s) for s in catalog_instances((GF(2), GF(3)), max_dim=5)]
    algs += random_leibniz_gf2(60, max_dim=3, seed=5)
    algs += random_leibniz(GF(3), 2, 20, seed=5)
    return algs


def test_class_implications():
    for alg in sample():
        nil = cl.in_class(alg, "nilpotent")
        ss = cl.in_class(alg, "strongly_solvable")
        sup = cl.in_class(alg, "supersolvable")
        sol = cl.in_class(alg, "solvable")
        assert not nil or ss
        assert not ss or sol
        assert not sup or sol


def test_leib_zero_iff_lie():
    for alg in sample():
        assert cl.leib_ideal(alg).is_zero() == ac.check_lie(alg)[0]
        q, _ = cl.lie_quotient(alg)
        assert ac.check_lie(q)[0]


def test_flags_reverify_and_match_brute_force():
    for alg in sample():
        flag = cl.supersolvable_flag(alg)
        if flag is not None:
            assert flag.verify(alg)
        if alg.dim <= 4 and alg.field.p == 2:
            assert (flag is None) == (brute_force_flag(alg) is None)


def test_sums_of_nil_ideals():
    for alg in random_leibniz_gf2(40, max_dim=3, seed=10):
        nil_sum_pairs(alg)


def test_nil_passes_to_frattini_quotient():
    algs = [build(FamilySpec("cyclic_leibniz", GF(2), n=3)),
            build(FamilySpec("cyclic_leibniz", GF(3), n=2))]
    algs += [a for a in random_leibniz_gf2(60, max_dim=3, seed=11)
             if not lt.frattini(a).Phi.is_zero()][:15]
    assert sum(nil_quotient_holds(a) for a in algs) > 0


def test_two_generated_triangulability_lifts():
    """If every proper 2-generated subalgebra is triangulable on L, so is L on itself."""
    algs = [a for a in sample() if a.field.is_prime and a.dim <= 4 and cl.is_solvable(a)]
    lifted = 0
    for alg in algs:
        full = alg.full()
        proper = [s for s in lt.two_generated_subalgebras(alg) if not s.is_full()]
        if all(cl.is_triangulable(alg, s, full) for s in proper):
            assert cl.is_triangulable(alg, full, full)
            lifted += 1
    assert lifted > 0


def test_analyze_reports_refusals():
    big = build(FamilySpec("cor_a", p=5))
    rep = cl.analyze(big)
    assert set(rep.refusals) == {"nilradical", "frattini", "socle"}
    assert rep.classes["solvable"] and not rep.classes["supersolvable"]
