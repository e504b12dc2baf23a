"""Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.

Run with pytest (the lines are echoed in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import traceback

import pytest

from weakhopf import zoo
from weakhopf.coreops import (as_wb, check_weak_bialgebra, hopf_criterion, identity_suite,
                              is_cocommutative, is_commutative, verify_antipode)
from weakhopf.errors import InvalidLambda
from weakhopf.fuzz import run_fuzz
from weakhopf.integrals import (check_integral_condition, integral_space, maschke_semisimple,
                                smash_integral, smash_semisimplicity_agrees)
from weakhopf.interact import check_module_algebra, lambda_action_unchecked, lambda_conditions, make_lambda_action
from weakhopf.linalg import Tensor, contract, rank, same_span, stack_cols
from weakhopf.matched import build_dual_matched_pair, check_abelian, check_compatible, check_weak_matched_pair
from weakhopf.scalars import Q
from weakhopf.smash import (build_antipode, check_antipode_conditions, check_smash_bialgebra,
                            smash_counit_formula, smash_is_hopf)

from helpers import F5, F7, GROUPS, PAIRS, pair, smash, zoo_instances

CORE = ["hg_c2", "hg_c2xc2", "lambda_z"]          # the pairs of criterion 4
RESULTS = {}


def columns(space):
    return [space.basis.column(i).reshape(space.basis.rows) for i in range(space.dim)]


def pad(field, v, before, after):
    n = before + len(v) + after
    return Tensor.from_values(field, [0] * before + list(v) + [0] * after).reshape(n, 1)


# --- the criteria -------------------------------------------------------------


def zoo_validation():
    builds = [zoo.hg(g, Q) for g in GROUPS] + [zoo.hg("C4", F5), zoo.hg("C3", F7)]
    builds += [zoo.groupoid_algebra(s, Q) for s in ["C1", "C2", "C3", "C2,C3", "C1,C2,C3", "C4,C2xC2", "C2,C3,C3"]]
    builds += [zoo.groupoid_algebra("C2,C3", F5),
               zoo.disjoint_union(zoo.hg("C2", Q), zoo.groupoid_algebra("C3", Q)),
               zoo.disjoint_union(zoo.hg("C3", F7), zoo.hg("C2", F7)),
               zoo.kaplansky(zoo.groupoid_algebra("C2", Q))]
    for h in builds:
        assert check_weak_bialgebra(h.wb).ok
        verify_antipode(h.wb, h.antipode)
        assert identity_suite(h).ok
    return f"{len(builds)} instances, zero failing checks"


def hopf_coherence():
    for label, build in zoo_instances():
        ok, conds = hopf_criterion(build())
        assert set(conds.values()) == {ok}, label
    assert not hopf_criterion(zoo.hg("C2", Q))[0]
    for s in ["C2,C3", "C1,C2,C3", "C4,C2xC2", "C2,C3,C3"]:
        assert not hopf_criterion(zoo.groupoid_algebra(s, Q))[0]
    for s in ["C1", "C2", "C3", "C4", "C2xC2", "S3"]:
        assert hopf_criterion(zoo.groupoid_algebra(s, Q))[0]
    return "five conditions agree on every zoo instance"


def integrals():
    for g in GROUPS:
        h = zoo.hg(g, Q)
        assert integral_space(h).dim == h.dim == zoo.parse_group(g).order
        ok, alpha = maschke_semisimple(h)
        assert ok and contract("a,ab->b", alpha, h.wb.Et) == h.wb.u
    for base in [zoo.groupoid_algebra("C2", Q), zoo.groupoid_algebra("S3", Q)]:
        assert integral_space(zoo.kaplansky(base)).dim == integral_space(base).dim + 1
    h1, h2 = zoo.hg("C2", Q), zoo.groupoid_algebra("C3", Q)
    u = zoo.disjoint_union(h1, h2)
    cols = [pad(Q, v.raw_values(), 0, h2.dim) for v in columns(integral_space(h1))]
    cols += [pad(Q, v.raw_values(), h1.dim, 0) for v in columns(integral_space(h2))]
    assert same_span(stack_cols(cols), integral_space(u).basis)
    return "dims |G|, +1 for the extension, direct sum for unions"


def matched_pairs():
    for name in ["hg_c2", "hg_c2xc2"]:
        mp = pair(name)
        assert check_weak_matched_pair(mp).ok and check_abelian(mp) and check_compatible(mp).ok
    assert check_weak_matched_pair(pair("lambda_z")).ok
    h = zoo.groupoid_algebra("C2,C3", Q)
    rng = random.Random(11)
    for _ in range(500):
        lam = [rng.choice([0, 1, 2]) for _ in range(5)]
        if [i.id for i in lambda_conditions(h, lam).failures()] == ["lambda_multiplicative"]:
            break
    else:
        raise AssertionError("no multiplicativity-only λ found")
    with pytest.raises(InvalidLambda):
        make_lambda_action(h, h, lam)
    assert not check_module_algebra(lambda_action_unchecked(h, h, lam)).ok
    return f"fuzzed λ={lam} rejected and fails the module algebra check"


def smash_subspace():
    for name in CORE:
        sp = smash(name)
        amb = sp.ambient
        assert contract("uv,vw->uw", amb.P, amb.P) == amb.P
        assert check_weak_bialgebra(sp.wb).ok and check_smash_bialgebra(sp).ok
        E = contract("uw,kw->uk", amb.P, sp.coords)
        Lt = sp.coords.T
        assert contract("ui,vj,ijk->uvk", E, E, sp.wb.M) == contract("uvc,cw,wk->uvk", amb.AM, amb.P, Lt)
        assert contract("ui,ipq->upq", E, sp.wb.D) == \
            contract("ubc,bp,cq,pj,qk->ujk", amb.AD, amb.P, amb.P, Lt, Lt)
        formula = smash_counit_formula(sp.mp)
        assert contract("ui,i->u", E, sp.wb.e) == formula
        assert contract("uw,w->u", amb.P, formula) == formula
    return "P² = P, induced maps match, counit independent of representatives"


def smash_antipode():
    for name in CORE:
        sp = smash(name)
        assert check_antipode_conditions(sp.mp).ok
        h = build_antipode(sp)
        verify_antipode(h.wb, h.antipode)
    sp = smash("hg_c2")
    one = sp.wb.u
    assert not contract("ab->ab", sp.wb.d1) == contract("a,b->ab", one, one)
    assert not hopf_criterion(build_antipode(sp))[0]
    ok, conds = hopf_criterion(build_antipode(smash("lambda_z")))
    assert ok and all(conds.values()) and smash_is_hopf(smash("lambda_z"))
    return "antipodes verified; ℋ^C2 smash not Hopf, λ/z smash Hopf"


def quantitative():
    sp = smash("hg_c2")
    g = zoo.parse_group("C2xC2")
    diag = [i for i in range(4) if g.labels[i] in ("(0,0)", "(1,1)")]
    q = zoo.hg(zoo.group_quotient(g, diag), Q)
    triple = lambda h: (h.dim, is_commutative(h), is_cocommutative(h), integral_space(h).dim)
    assert triple(sp.wb) == triple(q) == (2, True, True, 2)
    from weakhopf.interact import lambda_image
    sp = smash("lambda_z")
    A = as_wb(sp.mp.a)
    z = Tensor.from_values(Q, [0, 0, 1, 0, 0])
    Az = contract("xym,y->xm", A.M, z)
    Hl = lambda_image(sp.mp.h, [1, 1, 0, 0, 0])
    cols = [contract("m,k->mk", Az[x], Hl[h]).reshape(A.dim * sp.mp.h.dim, 1)
            for x in range(A.dim) for h in range(sp.mp.h.dim)]
    assert same_span(stack_cols(cols), sp.basis)
    assert sp.dim == rank(Az.T) * rank(Hl.T)
    k = smash("kaplansky")
    assert k.dim == (k.mp.a.dim - 1) * (k.mp.h.dim - 1)
    return f"triple {triple(q)}; λ/z dim {sp.dim}; extension dim {k.dim}"


def smash_integrals():
    mp = pair("lambda_z")
    for alpha in columns(integral_space(mp.a)):
        for t in columns(integral_space(mp.h)):
            assert check_integral_condition(mp, alpha, t).ok
    for name in CORE:
        sp = smash(name)
        target = integral_space(sp.wb)
        for alpha in columns(integral_space(sp.mp.a)):
            for t in columns(integral_space(sp.mp.h)):
                assert target.contains(smash_integral(sp, alpha, t))
    for name in PAIRS:
        crit, direct = smash_semisimplicity_agrees(smash(name))
        assert crit == direct, name
    return f"criterion agrees with Maschke on {len(PAIRS)} smash products"


def duality():
    mp = pair("hg_c2")
    dp = build_dual_matched_pair(mp)
    assert dp.mirrored and check_weak_matched_pair(dp).ok
    back = build_dual_matched_pair(dp)
    assert back.T == mp.T and back.R == mp.R
    for name in ("M", "u", "D", "e"):
        assert getattr(back.h.wb, name) == getattr(mp.h.wb, name)
        assert getattr(back.a.wb, name) == getattr(mp.a.wb, name)
    return "mirrored checks pass, double dual equal"


def property_suite():
    s = run_fuzz(seed=0, trials=200)
    assert len(s.trials) == 200 and s.false_passes == 0
    assert all(t.report.failures()[0].witness is not None for t in s.trials)
    assert s.mismatches == 0
    return f"200 trials, {s.false_passes} false passes"


CRITERIA = [
    (1, "zoo validation", zoo_validation),
    (2, "Hopf criterion coherence", hopf_coherence),
    (3, "integrals", integrals),
    (4, "matched pairs", matched_pairs),
    (5, "smash subspace", smash_subspace),
    (6, "smash antipode", smash_antipode),
    (7, "quantitative smash checks", quantitative),
    (8, "smash integrals", smash_integrals),
    (9, "duality", duality),
    (10, "property suite", property_suite),
]


def evaluate(number, title, fn):
    try:
        detail = fn()
        line = f"PASS  {number:>2}. {title}: {detail}"
    except Exception as exc:                       # report, then re-raise in the test
        line = f"FAIL  {number:>2}. {title}: {type(exc).__name__}: {exc}"
        RESULTS[number] = line
        print(line)
        raise
    RESULTS[number] = line
    print(line)
    return line


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    evaluate(number, title, fn)


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        try:
            evaluate(*c)
        except Exception:
            failed += 1
            traceback.print_exc(limit=2)
    sys.exit(1 if failed else 0)
