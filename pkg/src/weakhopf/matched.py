"""Weak matched pairs (H, A): A a left H-module algebra, H a right A-comodule
coalgebra, tied together by a twisted-bialgebra compatibility.

The mixed condition is checked in its expanded form, as an identity in
H⊗A⊗A over all basis triples (h, g, x).
"""
from __future__ import annotations

from dataclasses import dataclass

from .coreops import CheckReport, WeakHopfAlgebra, as_wb, is_cocommutative, is_commutative
from .errors import ConsistencyError, FieldMismatch, InvalidStructure
from .interact import (ActionData, CoactionData, check_comodule_coalgebra, check_module_algebra,
                       dual_action_from_coaction, dual_coaction_from_action, make_lambda_action,
                       make_z_coaction, mirror_action, mirror_coaction, regular_action,
                       regular_coaction, trivial_action, trivial_coaction)
from .linalg import Tensor, contract
from . import zoo


@dataclass
class MatchedPairData:
    h: object
    a: object
    act: ActionData
    co: CoactionData
    abelian: bool | None = None       # set by check_abelian
    compatible: bool | None = None    # set by check_compatible

    def __post_init__(self):
        if self.act.h is not self.h and as_wb(self.act.h) != as_wb(self.h):
            raise InvalidStructure("action is not over H")
        if self.co.h is not self.h and as_wb(self.co.h) != as_wb(self.h):
            raise InvalidStructure("coaction is not on H")
        if self.h.field != self.a.field:
            raise FieldMismatch(f"{self.h.field} vs {self.a.field}")

    @property
    def mirrored(self) -> bool:
        return self.act.side == "right"

    @property
    def T(self) -> Tensor:
        return self.act.T

    @property
    def R(self) -> Tensor:
        return self.co.R


def mirror_pair(mp: MatchedPairData) -> MatchedPairData:
    """Right action / left coaction <-> left action / right coaction over op-cop structures."""
    act, co = mirror_action(mp.act), mirror_coaction(mp.co)
    return MatchedPairData(act.h, act.a, act, co)


def check_weak_matched_pair(mp: MatchedPairData) -> CheckReport:
    """Module algebra, comodule coalgebra, the mixed identity in H⊗A⊗A, the
    source-map factorization and the unit condition in H⊗A⊗H."""
    if mp.mirrored:
        return check_weak_matched_pair(mirror_pair(mp))
    H, A = as_wb(mp.h), as_wb(mp.a)
    T, R = mp.T, mp.R
    MH, MA, DA = H.M, A.M, A.D
    r = CheckReport()
    r.extend(check_module_algebra(mp.act), "module.")
    r.extend(check_comodule_coalgebra(mp.co), "comodule.")
    # (h₂g)⁰ ⊗ (h₁·x)₁ ⊗ (h₁·x)₂(h₂g)¹
    lhs = contract("hab,axc,cqs,bgm,mpy,syr->hgxpqr", H.D, T, DA, MH, R, MA)
    # h₃⁰g⁰ ⊗ (h₁⁰·x₁) ⊗ h₁¹(h₂·x₂)h₃¹(h₄·g¹)
    # legs: h₁..h₄ = a,b,c,d; ρ(h₁) = i⊗j; x₁⊗x₂ = s⊗t; ρ(h₃) = l⊗m; ρ(g) = n⊗o.
    # Staged by hand: a single contraction picks a poor path on object arrays.
    D4 = contract("habk,kcd->habcd", H.D3, H.D)
    first = contract("aij,xst,isq->axqjt", R, DA, T)                   # h₁⁰·x₁, h₁¹, x₂
    first = contract("axqjt,btw->abxqjw", first, T)                    # h₂·x₂
    first = contract("abxqjw,jwk->abxqk", first, MA)                   # h₁¹(h₂·x₂)
    last = contract("clm,gno,lnp->cgpmo", R, R, MH)                    # h₃⁰g⁰, h₃¹, g¹
    last = contract("cgpmo,dov->cdgpmv", last, T)                      # h₄·g¹
    prod3 = contract("kmy,yvr->kmvr", MA, MA)
    last = contract("cdgpmv,kmvr->cdgpkr", last, prod3)
    first = contract("habcd,abxqk->hcdxqk", D4, first)
    rhs = contract("hcdxqk,cdgpkr->hgxpqr", first, last)
    r.compare("mixed_coproduct_identity", lhs, rhs, 3)
    # ε_s(h·x) = ε_s(h·1) ε_s(x)
    v = mp.act.one_image
    r.compare("source_map_factorizes", contract("hxc,cd->hxd", T, A.Es),
              contract("hb,bc,xd,cdm->hxm", v, A.Es, A.Es, MA), 2)
    # ρ(1₁)⊗1₂ = 1₁ ⊗ ε(1'₁⁰)1'₁¹ ⊗ 1₂1'₂
    d = H.d1
    r.compare("unit_coaction", contract("ab,apx->pxb", d, R),
              contract("ab,cd,cqx,q,bdm->axm", d, d, R, H.e, MH), 0)
    return r


def check_abelian(mp: MatchedPairData) -> bool:
    mp.abelian = is_cocommutative(mp.h) and is_commutative(mp.a)
    return mp.abelian


def check_eps_t_factorization(mp: MatchedPairData) -> CheckReport:
    """For commutative A: ε_t(h·x) = ε_t(h·1) ε_t(x)."""
    A = as_wb(mp.a)
    T, v = mp.T, mp.act.one_image
    r = CheckReport()
    r.compare("target_map_factorizes", contract("hxc,cd->hxd", T, A.Et),
              contract("hb,bc,xd,cdm->hxm", v, A.Et, A.Et, A.M), 2)
    return r


def check_compatible(mp: MatchedPairData) -> CheckReport:
    """Compatibility of the action with the unit of A, followed by the four
    consequences it implies (a failing consequence means a bug)."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    T, v = mp.T, mp.act.one_image
    dA, MA, Es = A.d1, A.M, A.Es
    r = CheckReport()
    r.compare("unit_image_splits", v, contract("hab,cd,acp,bdq,q->hp", H.D, dA, T, T, A.e), 1)
    r.compare("unit_coproduct_absorbs", contract("cd,hcp,gdq->hgpq", dA, T, T),
              contract("hv,cd,gw,vcp,wdq->hgpq", v, dA, v, MA, MA), 2)
    mp.compatible = r.ok
    if not r.ok:
        return r
    cons = CheckReport()
    cons.compare("unit_image_source_factor", contract("hab,ap,bq,qr,prm->hm", H.D, v, v, Es, MA), v, 1)
    cons.compare("source_of_unit_image", contract("hp,pq->hq", v, Es),
                 contract("hab,ap,pr,bq,qs,rsm->hm", H.D, v, Es, v, Es, MA), 1)
    cons.compare("unit_image_first_leg", contract("cd,hcp->hpd", dA, T),
                 contract("hv,cd,vcp->hpd", v, dA, MA), 1)
    cons.compare("unit_image_via_coproduct", contract("cd,hcp,dq,pqm->hm", dA, T, Es, MA), v, 1)
    r.extend(cons)
    if not cons.ok:
        raise ConsistencyError("compatible pair violates a consequence: " + cons.failures()[0].line())
    return r


def check_classical_matched_pair(mp: MatchedPairData) -> CheckReport:
    """The six conditions of a matched pair of Hopf algebras (module algebra,
    comodule coalgebra, cocycle-free product and coproduct rules, counit and unit)."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    T, R = mp.T, mp.R
    r = CheckReport()
    r.extend(check_module_algebra(mp.act), "module.")
    r.extend(check_comodule_coalgebra(mp.co), "comodule.")
    r.compare("coaction_of_product", contract("hgm,mpx->hgpx", H.M, R),
              contract("hab,acy,gdz,bzw,cdp,ywx->hgpx", H.D, R, R, T, H.M, A.M), 2)
    r.compare("coproduct_of_action", contract("hxc,cpq->hxpq", T, A.D),
              contract("hab,acy,xst,csp,btw,ywq->hxpq", H.D, R, A.D, T, T, A.M), 2)
    r.compare("counit_of_action", contract("hxc,c->hx", T, A.e), contract("h,x->hx", H.e, A.e), 2)
    r.compare("coaction_of_unit", contract("h,hpx->px", H.u, R), contract("p,x->px", H.u, A.u), 0)
    return r


# ---------------------------------------------------------------------------
# constructions


def pair_regular(h) -> MatchedPairData:
    """(H, H) with H acting by multiplication and coacting by its coproduct."""
    return MatchedPairData(h, h, regular_action(h), regular_coaction(h))


def pair_lambda_z(h, a, lam, z) -> MatchedPairData:
    return MatchedPairData(h, a, make_lambda_action(h, a, lam), make_z_coaction(h, a, z))


def pair_trivial(h, a) -> MatchedPairData:
    return MatchedPairData(h, a, trivial_action(h, a), trivial_coaction(h, a))


def lambda_z_criterion(mp_or_h, lam=None, a=None, z=None) -> CheckReport:
    """λ(h₁)h₂λ(h₃) = λ(h₁)h₂ on H and zxz = xz on A."""
    H, A = as_wb(mp_or_h), as_wb(a)
    lam = lam if isinstance(lam, Tensor) else Tensor.from_values(H.field, list(lam))
    z = z if isinstance(z, Tensor) else Tensor.from_values(A.field, list(z))
    r = CheckReport()
    r.compare("lambda_two_sided", contract("habc,a,c->hb", H.D3, lam, lam),
              contract("hab,a->hb", H.D, lam), 1)
    r.compare("z_sandwich", contract("i,ixm,mjn,j->xn", z, A.M, A.M, z), contract("xjn,j->xn", A.M, z), 1)
    return r


def kaplansky_pair(base: MatchedPairData) -> MatchedPairData:
    """Extend a Hopf matched pair (H, A) to (H′, A′).

    𝟙_H′ acts as the identity, H acts on 𝟙_A′ through ε, and
    ρ(𝟙_H′) = (𝟙−𝕖)⊗(𝟙−𝕖) + 𝕖⊗𝕖 with 𝕖 the old unit of A (or H).
    """
    H, A = base.h, base.a
    Hp, Ap = zoo.kaplansky(H), zoo.kaplansky(A)
    f = H.field
    nh, na = H.dim, A.dim
    Nh, Na = nh + 1, na + 1
    T0, R0 = base.T, base.R
    Tv = [[[f.zero] * Na for _ in range(Na)] for _ in range(Nh)]
    for h in range(nh):
        for a in range(na):
            for b in range(na):
                Tv[h][a][b] = T0[h, a, b]
        Tv[h][na][na] = as_wb(H).e[h]
    for a in range(Na):
        Tv[nh][a][a] = f.one
    Rv = [[[f.zero] * Na for _ in range(Nh)] for _ in range(Nh)]
    for h in range(nh):
        for p in range(nh):
            for x in range(na):
                Rv[h][p][x] = R0[h, p, x]
    eh = [as_wb(H).u[i] for i in range(nh)] + [f.zero]
    ea = [as_wb(A).u[i] for i in range(na)] + [f.zero]
    one_h = [-x for x in eh]
    one_h[nh] = f.one
    one_a = [-x for x in ea]
    one_a[na] = f.one
    for p in range(Nh):
        for x in range(Na):
            Rv[nh][p][x] = one_h[p] * one_a[x] + eh[p] * ea[x]
    T = Tensor.from_values(f, Tv)
    R = Tensor.from_values(f, Rv)
    return MatchedPairData(Hp, Ap, ActionData.from_tensor(Hp, Ap, T), CoactionData.from_tensor(Hp, Ap, R))


# ---------------------------------------------------------------------------
# duality


def build_dual_matched_pair(mp: MatchedPairData) -> MatchedPairData:
    """(A*, H*): H* is a right A*-module algebra and A* a left H*-comodule coalgebra."""
    act = dual_action_from_coaction(mp.co)      # right action of A* on H*
    co = dual_coaction_from_action(mp.act)      # left coaction of H* on A*
    return MatchedPairData(act.h, act.a, act, co)
