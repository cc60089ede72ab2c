"""The acceptance battery behind ``leibalg verify-suite`` and tests/test_acceptance.py.

Each criterion is a function returning ``(passed, detail)``; everything is
exact, so there are no tolerances.
"""

from __future__ import annotations

import random
import time

from . import algebra as ac
from . import classify as cl
from . import lattice as lt
from .catalog import FamilySpec, build, catalog_instances, module_and_complement, P_FAMILIES
from .companion import Decomposition, companion_lie, decompose, in_adapted_basis, leibnizize
from .errors import BudgetExceeded
from .exactfield import GF, Q
from .oracles import brute_force_flag, leibniz_tensors_gf2, random_leibniz_gf2


class CriterionFailed(AssertionError):
    pass


def _require(cond, msg):
    if not cond:
        raise CriterionFailed(msg)


def _cor(family, p):
    return build(FamilySpec(family, p=p, variant="leibniz"))


def _a_of(alg, p):
    return alg.span([alg.basis_vector(i) for i in range(p)])


def random_leibniz(field, dim, count, seed=0):
    """Rejection-sampled uniform random Leibniz tensors (small ``dim`` only)."""
    rng = random.Random(seed)
    elems = list(field.elements())
    out = []
    while len(out) < count:
        t = tuple(tuple(tuple(rng.choice(elems) for _ in range(dim)) for _ in range(dim))
                  for _ in range(dim))
        alg = ac.Algebra(field, dim, t)
        if ac.check_leibniz(alg)[0]:
            out.append(alg)
    return out


def small_catalog():
    return [build(s) for s in catalog_instances((GF(2), GF(3)), max_dim=5)]


def criterion_identities():
    specs = catalog_instances((GF(2), GF(3), GF(5), GF(7)), max_dim=9)
    specs += [FamilySpec(f, Q, n=n) for f in ("abelian", "cyclic_leibniz") for n in (1, 2, 3)]
    specs += [FamilySpec("heisenberg", Q), FamilySpec("sl2", Q)]
    for spec in specs:
        alg = build(spec)
        _require(ac.check_leibniz(alg)[0], f"{spec} fails the Leibniz identity")
        lie_expected = spec.variant == "lie" if spec.family in P_FAMILIES else \
            spec.family != "cyclic_leibniz" or (spec.n or 0) <= 1
        _require(ac.check_lie(alg)[0] == lie_expected, f"{spec}: check_lie disagrees with variant")
    cyc = build(FamilySpec("cyclic_leibniz", GF(3), n=2))
    ok, wit = ac.check_lie(cyc)
    _require(not ok and wit.indices == (0, 0) and wit.lhs == cyc.basis_vector(1),
             "cyclic_leibniz(2) should fail with e1*e1 = e2")
    return f"{len(specs)} builds checked"


def criterion_companion():
    for fam, p in (("cor_a", 3), ("cor_b", 2)):
        alg = _cor(fam, p)
        dec = decompose(alg)
        _require(dec.a == _a_of(alg, p), f"{fam}: A is {dec.a}")
        comp = companion_lie(alg, dec)
        _require(ac.check_lie(comp)[0], f"{fam}: companion is not Lie")
        back = leibnizize(comp, dec.adapted())
        _require(back.tensor == in_adapted_basis(alg, dec).tensor, f"{fam}: round trip differs")
    return "cor_a(3), cor_b(2)"


def criterion_structure():
    alg = _cor("cor_a", 3)
    a = _a_of(alg, 3)
    _require(lt.minimal_ideals(alg) == [a], "minimal ideals are not exactly {A}")
    _require(lt.socle(alg) == a, "socle != A")
    _require(cl.centralizer(alg, a) == a, "centralizer(A) != A")
    _require(lt.nilradical(alg) == a, "nilradical != A")
    _require(cl.leib_ideal(alg) == a, "Leib != A")
    _require(lt.frattini(alg).Phi.is_zero(), "Phi != 0")
    return "Soc = N = Z(A) = Leib = A, Phi = 0"


def criterion_minimal_structure():
    alg = _cor("cor_a", 3)
    a = _a_of(alg, 3)
    h = alg.span([alg.basis_vector(3), alg.basis_vector(4)])
    _require(a.rank == 3, "dim A != 3")
    _require(ac.subspace_product(alg, a, a).is_zero(), "A^2 != 0")
    _require(ac.subspace_product(alg, a, alg.full()).is_zero(), "A L != 0")
    _require(ac.check_lie(ac.subalgebra_as_algebra(alg, h)[0])[0], "H is not Lie")
    v = lt.minimal_non_class(alg, "strongly_solvable")
    _require(v.verdict == "minimally_non_class", f"verdict {v.verdict}")
    maxes = lt.maximal_subalgebras(alg)
    for m in maxes:
        _require(cl.in_class(ac.subalgebra_as_algebra(alg, m)[0], "strongly_solvable"),
                 f"maximal subalgebra {m} not strongly solvable")
    return f"{len(maxes)} maximal subalgebras, all strongly solvable"


def criterion_two_generated():
    for fam, p in (("cor_a", 3), ("cor_b", 2)):
        alg = _cor(fam, p)
        res = lt.is_two_generated(alg)
        _require(res.result is True, f"{fam}: not two-generated")
        _require(ac.generated_subalgebra(alg, list(res.pair)).is_full(), f"{fam}: witness fails")
    return "witnesses re-verified"


def criterion_frattini_quotient(n_random=200):
    algs = small_catalog() + random_leibniz_gf2(n_random, max_dim=3, seed=2024)
    for alg in algs:
        _require(ac.check_leibniz(alg)[0], "sample fails the Leibniz identity")
        phi = lt.frattini(alg).Phi
        q, _ = ac.quotient(alg, phi)
        _require(lt.frattini(q).Phi.is_zero(), f"Phi(L/Phi(L)) != 0 for {alg.tensor}")
    return f"{len(algs)} algebras"


def criterion_triangulable():
    algs = small_catalog()
    algs += random_leibniz_gf2(100, max_dim=3, seed=9)
    algs += random_leibniz(GF(3), 2, 40, seed=9)
    checked = 0
    for alg in algs:
        if not cl.is_solvable(alg):
            continue
        full = alg.full()
        tri = cl.is_triangulable(alg, full, full)
        _require(tri == cl.in_class(alg, "strongly_solvable"),
                 f"triangulable={tri} disagrees with strong solvability for {alg.tensor}")
        checked += 1
    return f"{checked} solvable algebras"


def nil_sum_pairs(alg):
    """Count ideal pairs checked; raise if a sum of nil ideals is not nil."""
    full = alg.full()
    nil = [s for s in lt.ideals(alg) if cl.acts_nilpotently(alg, s, full)]
    for i, s in enumerate(nil):
        for t in nil[i:]:
            _require(cl.acts_nilpotently(alg, s + t, full), f"S + T not nil for {s}, {t}")
    return len(nil) * (len(nil) + 1) // 2


def nil_quotient_holds(alg):
    """nil(S/Phi) equals the image of nil(S) for every subalgebra S containing Phi."""
    phi = lt.frattini(alg).Phi
    q, proj = ac.quotient(alg, phi)
    count = 0
    for s in lt.enumerate_subspaces(alg, "subalgebras"):
        if not s.contains(phi):
            continue
        lhs = cl.nil_ideal(q, ac.image_of(proj, s), q.full())
        rhs = ac.image_of(proj, cl.nil_ideal(alg, s, alg.full()))
        _require(lhs == rhs, f"nil(S/Phi) != nil(S)/Phi for S = {s}")
        count += 1
    return count


def criterion_nil_sums():
    pairs = 0
    for spec in catalog_instances((GF(2),), max_dim=5):
        pairs += nil_sum_pairs(build(spec))
    subs = 0
    for alg in (build(FamilySpec("cyclic_leibniz", GF(2), n=2)), build(FamilySpec("heisenberg", GF(2)))):
        subs += nil_quotient_holds(alg)
    return f"{pairs} ideal pairs, {subs} subalgebras over Phi"


def criterion_oracles():
    for p in (2, 3):
        for d in range(6):
            count = sum(1 for _ in lt.all_subspaces(GF(p), d))
            _require(count == lt.subspace_count(d, p), f"GF({p})^{d}: {count} subspaces")
    n = 0
    for d in range(4):
        for alg in leibniz_tensors_gf2(d):
            flag = cl.supersolvable_flag(alg)
            _require((flag is None) == (brute_force_flag(alg) is None),
                     f"flag search disagrees with brute force on {alg.tensor}")
            n += 1
    return f"{n} Leibniz tensors of dim <= 3 over GF(2)"


def criterion_refusal():
    alg = _cor("cor_a", 5)
    expected = lt.subspace_count(alg.dim, 5)
    a, h = module_and_complement(FamilySpec("cor_a", p=5))
    refusing = [
        lambda: list(lt.enumerate_subspaces(alg, "subspaces")),
        lambda: lt.frattini(alg),
        lambda: lt.minimal_ideals(alg),
        lambda: lt.nilradical(alg),
        lambda: lt.complement(alg, a),
        lambda: lt.minimal_non_class(alg, "supersolvable"),
        lambda: lt.is_simple(alg),
        lambda: decompose(alg),
        lambda: cl.nil_ideal(alg, alg.full(), alg.full()),
    ]
    for op in refusing:
        try:
            op()
        except BudgetExceeded as exc:
            _require(exc.count == expected, f"refusal count {exc.count} != {expected}")
        else:
            raise CriterionFailed("lattice operation did not refuse")
    cl.series(alg)
    _require(cl.supersolvable_flag(alg) is None, "cor_a(5) should not be supersolvable")
    _require(cl.leib_ideal(alg) == a, "Leib != A for cor_a(5)")
    comp = companion_lie(alg, Decomposition(a, h))
    _require(ac.check_lie(comp)[0], "companion of cor_a(5) not Lie")
    return f"refused with {expected} subspaces; series/flag/leib/companion ok"


CRITERIA = [
    ("1 identity suite", criterion_identities),
    ("2 companion construction", criterion_companion),
    ("3 unique minimal ideal structure", criterion_structure),
    ("4 minimally non-strongly-solvable structure", criterion_minimal_structure),
    ("5 two-generation", criterion_two_generated),
    ("6 Frattini quotient", criterion_frattini_quotient),
    ("7 triangulable iff strongly solvable", criterion_triangulable),
    ("8 nil sums and nil quotients", criterion_nil_sums),
    ("9 oracle cross-checks", criterion_oracles),
    ("10 refusal behavior", criterion_refusal),
]


def run_criterion(fn):
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except CriterionFailed as exc:
        ok, detail = False, str(exc)
    return ok, detail, time.perf_counter() - start


def run_all(out=None, timing=False):
    results = []
    for name, fn in CRITERIA:
        ok, detail, secs = run_criterion(fn)
        results.append((name, ok, detail))
        if out is not None:
            line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
            if timing:
                line += f" [{secs:.2f}s]"
            print(line, file=out)
    return results
