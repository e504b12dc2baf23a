from fractions import Fraction

import pytest

from weakhopf import zoo
from weakhopf.coreops import (as_wb, check_antipode_axioms, check_weak_bialgebra, eps_t,
                              hopf_criterion, identity_suite, is_cocommutative, is_commutative,
                              solve_antipode)
from weakhopf.errors import BadCharacteristic, BadParams, NotAbelian, NotHopf, NotSubgroup, UnknownExample
from weakhopf.scalars import Field, Q

from helpers import F5, F7, naive_ok, zoo_instances

INSTANCES = zoo_instances()


@pytest.mark.parametrize("label,build", INSTANCES, ids=[l for l, _ in INSTANCES])
def test_zoo_instance_passes_everything(label, build):
    h = build()
    assert check_weak_bialgebra(h.wb).ok
    assert check_antipode_axioms(h.wb, h.S).ok
    assert identity_suite(h).ok
    assert naive_ok(h)                       # independent loop-based oracle
    # the antipode is recovered by the linear solver
    assert solve_antipode(h.wb).S == h.S


def test_group_tables():
    g = zoo.parse_group("C2xC3")
    assert g.order == 6 and g.is_abelian()
    assert all(g.mul(a, g.inv(a)) == g.identity for a in range(6))
    s3 = zoo.parse_group("S3")
    assert s3.order == 6 and not s3.is_abelian()
    with pytest.raises(BadParams):
        zoo.parse_group("D7x")


def test_group_quotient():
    g = zoo.parse_group("C4")
    q = zoo.group_quotient(g, [0, 2])
    assert q.order == 2 and q.is_abelian()
    with pytest.raises(NotSubgroup):
        zoo.group_quotient(g, [0, 1])
    s3 = zoo.parse_group("S3")
    # a transposition subgroup is not normal
    t = next(i for i in range(6) if i != s3.identity and s3.mul(i, i) == s3.identity)
    with pytest.raises(NotSubgroup):
        zoo.group_quotient(s3, [s3.identity, t])


def test_hg_structure_constants_closed_form():
    h = zoo.hg("C3", Q)
    wb = h.wb
    g = zoo.parse_group("C3")
    # ε(g) = |G| at the identity, 0 elsewhere
    assert wb.e.tolist() == [3, 0, 0]
    # Δ(g) = (1/|G|) Σ_k gk ⊗ k⁻¹
    for a in range(3):
        for b in range(3):
            for c in range(3):
                expect = Fraction(1, 3) if g.mul(b, c) == a else 0
                assert wb.D[a, b, c] == expect


def test_hg_preconditions():
    with pytest.raises(BadCharacteristic):
        zoo.hg("C2", Field(2))
    with pytest.raises(BadCharacteristic):
        zoo.hg("C3", Field(3))
    with pytest.raises(NotAbelian):
        zoo.hg("S3", Q)
    assert isinstance(BadCharacteristic("x"), BadParams)


def test_groupoid_target_map_is_component_unit():
    h = zoo.groupoid_algebra("C2,C3", Q)
    Et = eps_t(h.wb)                      # matrix, out x in
    # ε_t(g) = identity of g's component
    units = {0: [1, 0, 0, 0, 0], 1: [0, 0, 1, 0, 0]}
    comp = [0, 0, 1, 1, 1]
    for i in range(5):
        assert Et.column(i).reshape(5).tolist() == units[comp[i]]


def test_hopf_criterion_flags():
    for s in ["C1", "C2", "C3", "S3", "C2xC2"]:
        assert hopf_criterion(zoo.groupoid_algebra(s, Q))[0]
    assert not hopf_criterion(zoo.groupoid_algebra("C2,C3", Q))[0]
    assert not hopf_criterion(zoo.hg("C2", Q))[0]
    assert hopf_criterion(zoo.hg("C1", Q))[0]


@pytest.mark.parametrize("label,build", INSTANCES, ids=[l for l, _ in INSTANCES])
def test_hopf_conditions_agree(label, build):
    ok, conds = hopf_criterion(build())
    assert set(conds.values()) == {ok}


def test_disjoint_union_blocks():
    a, b = zoo.hg("C2", Q), zoo.groupoid_algebra("C3", Q)
    u = zoo.disjoint_union(a, b)
    assert u.dim == 5
    assert u.wb.u.tolist() == a.wb.u.tolist() + b.wb.u.tolist()
    assert u.wb.e.tolist() == a.wb.e.tolist() + b.wb.e.tolist()
    # no mixing between the blocks
    M = u.wb.M
    assert M[0, 2].is_zero() and M[3, 1].is_zero()


def test_kaplansky_extension():
    base = zoo.groupoid_algebra("C2", Q)
    k = zoo.kaplansky(base)
    assert k.dim == 3
    assert k.wb.u.tolist() == [0, 0, 1]
    assert k.wb.e.tolist() == [1, 1, 2]
    # old unit is an idempotent, the new unit acts as identity
    old = k.wb.M[0, 0].tolist()
    assert old == [1, 0, 0]
    with pytest.raises(NotHopf):
        zoo.kaplansky(zoo.hg("C2", Q))


def test_dual_swaps_and_double_dual():
    for h in [zoo.hg("C3", Q), zoo.groupoid_algebra("C2,C3", F5), zoo.groupoid_algebra("S3", Q)]:
        d = zoo.dual(h)
        assert d.wb.M == h.wb.D.transpose(1, 2, 0)
        assert d.wb.e == h.wb.u
        dd = zoo.dual(d)
        for name in ("M", "u", "D", "e"):
            assert getattr(dd.wb, name) == getattr(h.wb, name)
        assert dd.S == h.S
    s3 = zoo.dual(zoo.groupoid_algebra("S3", Q))
    assert is_commutative(s3) and not is_cocommutative(s3)


def test_build_example_names():
    assert zoo.build_example("hg", {"group": "C2"}, Q).dim == 2
    assert zoo.build_example("union", {"parts": [{"example": "hg", "group": "C2"},
                                                 {"example": "groupoid", "groups": "C3"}]}, Q).dim == 5
    with pytest.raises(UnknownExample):
        zoo.build_example("quaternion", {}, Q)
    with pytest.raises(BadParams):
        zoo.build_example("union", {"parts": []}, Q)
