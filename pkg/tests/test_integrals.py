import pytest
from hypothesis import given, settings, strategies as st

from weakhopf import zoo
from weakhopf.coreops import as_wb
from weakhopf.errors import NotAnIntegral
from weakhopf.integrals import (check_action_stability, check_integral_condition, integral_space,
                                maschke_semisimple, smash_integral, smash_semisimple_criterion,
                                smash_semisimplicity_agrees)
from weakhopf.linalg import Tensor, contract, same_span, stack_cols
from weakhopf.scalars import Q

from helpers import F3, F5, F7, GROUPS, PAIRS, pair, smash


def columns(space):
    return [space.basis.column(i).reshape(space.basis.rows) for i in range(space.dim)]


@pytest.mark.parametrize("g", GROUPS)
def test_hg_integrals_are_everything(g):
    h = zoo.hg(g, Q)
    assert integral_space(h).dim == h.dim == integral_space(h, "right").dim
    ok, alpha = maschke_semisimple(h)
    assert ok
    assert contract("a,ab->b", alpha, h.wb.Et) == h.wb.u        # ε_t(α) = 1


def test_group_algebra_integral_is_sum_of_group():
    h = zoo.groupoid_algebra("C3", Q)
    sp = integral_space(h)
    assert sp.dim == 1
    v = sp.basis.column(0).reshape(3).tolist()
    assert v[0] != 0 and v == [v[0]] * 3


def test_maschke_over_characteristic():
    assert maschke_semisimple(zoo.groupoid_algebra("C3", Q))[0]
    assert not maschke_semisimple(zoo.groupoid_algebra("C3", F3))[0]     # ε_t(Σg) = 3 = 0
    assert maschke_semisimple(zoo.groupoid_algebra("C2", F3))[0]
    assert not maschke_semisimple(zoo.groupoid_algebra("C5", F5))[0]


@pytest.mark.parametrize("base", [zoo.groupoid_algebra("C2", Q), zoo.groupoid_algebra("C3", F3),
                                  zoo.groupoid_algebra("S3", Q)], ids=["kC2", "kC3/F3", "kS3"])
def test_kaplansky_integrals(base):
    k = zoo.kaplansky(base)
    n = base.dim
    I0, I1 = integral_space(base), integral_space(k)
    assert I1.dim == I0.dim + 1
    # ∫(H′) = k(𝟙 − 𝕖) + ∫(H), with ∫(H) sitting in the first n coordinates
    one_minus_e = [-x for x in base.wb.u.raw_values()] + [1]
    cols = [Tensor.from_values(k.field, one_minus_e).reshape(n + 1, 1)]
    for v in columns(I0):
        cols.append(Tensor.from_values(k.field, v.raw_values() + [0]).reshape(n + 1, 1))
    assert same_span(stack_cols(cols), I1.basis)
    assert maschke_semisimple(k)[0] == maschke_semisimple(base)[0]


@pytest.mark.parametrize("a,b", [(("C2", Q), ("C3", Q)), (("C2", F3), ("C3", F3))])
def test_disjoint_union_integrals_are_direct_sum(a, b):
    h1, h2 = zoo.groupoid_algebra(*a), zoo.groupoid_algebra(*b)
    u = zoo.disjoint_union(h1, h2)
    n1, n2 = h1.dim, h2.dim
    cols = [Tensor.from_values(u.field, v.raw_values() + [0] * n2).reshape(n1 + n2, 1)
            for v in columns(integral_space(h1))]
    cols += [Tensor.from_values(u.field, [0] * n1 + v.raw_values()).reshape(n1 + n2, 1)
             for v in columns(integral_space(h2))]
    assert same_span(stack_cols(cols), integral_space(u).basis)


def test_disjoint_union_semisimple_iff_every_component():
    """A direct sum of algebras is semisimple exactly when each summand is."""
    ss = zoo.groupoid_algebra("C2", F3)          # semisimple
    ns = zoo.groupoid_algebra("C3", F3)          # not semisimple
    assert maschke_semisimple(zoo.disjoint_union(ss, ss))[0]
    assert not maschke_semisimple(zoo.disjoint_union(ss, ns))[0]
    assert not maschke_semisimple(zoo.disjoint_union(ns, ns))[0]
    assert maschke_semisimple(zoo.groupoid_algebra("C2,C3", Q))[0]


def test_dual_of_nonabelian_group_algebra():
    d = zoo.dual(zoo.groupoid_algebra("S3", Q))
    assert integral_space(d).dim == 1
    assert maschke_semisimple(d)[0]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["hg C2xC2", "groupoid C2,C3", "kaplansky C2", "dual S3"]),
       st.lists(st.integers(-3, 3), min_size=7, max_size=7), st.data())
def test_integral_property_on_random_elements(which, coeffs, data):
    """hα = ε_t(h)α for random h and random α in the computed space."""
    h = {"hg C2xC2": lambda: zoo.hg("C2xC2", Q),
         "groupoid C2,C3": lambda: zoo.groupoid_algebra("C2,C3", Q),
         "kaplansky C2": lambda: zoo.kaplansky(zoo.groupoid_algebra("C2", Q)),
         "dual S3": lambda: zoo.dual(zoo.groupoid_algebra("S3", Q))}[which]()
    wb = as_wb(h)
    space = integral_space(h)
    alpha = Tensor.zeros(Q, (wb.dim,))
    for c, v in zip(coeffs, columns(space)):
        alpha = alpha + v.scale(c)
    x = Tensor.from_values(Q, data.draw(st.lists(st.integers(-3, 3), min_size=wb.dim, max_size=wb.dim)))
    lhs = contract("a,b,abm->m", x, alpha, wb.M)
    rhs = contract("a,ak,b,kbm->m", x, wb.Et, alpha, wb.M)
    assert lhs == rhs
    assert space.contains(alpha)


# --- integrals of smash products -------------------------------------------------


@pytest.mark.parametrize("name", PAIRS)
def test_smash_integrals_for_all_basis_choices(name):
    sp = smash(name)
    mp = sp.mp
    IA, IH = integral_space(mp.a), integral_space(mp.h)
    target = integral_space(sp.wb)
    for alpha in columns(IA):
        assert check_action_stability(mp, alpha).ok
        for t in columns(IH):
            assert check_integral_condition(mp, alpha, t).ok
            coords = smash_integral(sp, alpha, t)
            assert target.contains(coords)


def test_smash_integral_rejects_non_integrals():
    sp = smash("lambda_z")
    t = integral_space(sp.mp.h).basis.column(0).reshape(5)
    with pytest.raises(NotAnIntegral):
        smash_integral(sp, Tensor.from_values(Q, [0, 1, 0, 0, 0]), t)


@pytest.mark.parametrize("name", PAIRS)
def test_semisimplicity_criterion_agrees_with_maschke(name):
    crit, direct = smash_semisimplicity_agrees(smash(name))
    assert crit == direct


def test_semisimplicity_verdicts():
    assert smash_semisimple_criterion(smash("lambda_z"))[0]
    ok, wit = smash_semisimple_criterion(smash("hg_c2"))
    assert ok and wit is not None
    # over F3 the C3 factor kills the normalized integral
    assert not smash_semisimple_criterion(smash("lambda_z_f3"))[0]
    assert not maschke_semisimple(smash("lambda_z_f3").wb)[0]
