"""The smash product A##H of an abelian compatible weak matched pair.

The ambient space A⊗H (basis x#h -> x*dim(H) + h) carries

    (x#h)(y#g) = x(h₁·y) # h₂g
    Δ(x#h)     = x₁#h₁⁰ ⊗ x₂h₁¹#h₂
    ε(x#h)     = ε(x)ε(h)

and two commuting idempotents: right multiplication by 1#1 and (id⊗ε)Δ.
A##H is the image of their composite P.  Its basis is the set of leftmost
pivot columns of P, so each basis vector is P(e_x#e_h) for a recorded
representative pair (x, h), and all structure maps are computed on the
ambient space, projected and read back in that basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .coreops import (CheckReport, WeakBialgebra, WeakHopfAlgebra, as_wb, check_weak_bialgebra,
                      identity_suite, verify_antipode)
from .errors import (NotAbelian, NotCompatible, NotMatched, PreconditionUnmet,
                     WellDefinednessFailure)
from .linalg import Mat, Tensor, contract, image_basis, left_inverse
from .matched import MatchedPairData, check_abelian, check_compatible, check_weak_matched_pair


@dataclass
class AmbientSmash:
    mp: MatchedPairData
    AM: Tensor        # [u, v, w]
    AD: Tensor        # [u, p, q]
    ae: Tensor        # [u]
    au: Tensor        # [u]
    P_under: Tensor   # input-first [u, w]
    P_over: Tensor
    P: Tensor
    report: CheckReport = dc_field(default_factory=CheckReport)

    @property
    def dim(self) -> int:
        return self.ae.shape[0]

    @property
    def field(self):
        return self.ae.field

    def projector(self) -> Mat:
        """P as a matrix (out x in)."""
        return self.P.T

    def index(self, x: int, h: int) -> int:
        return x * self.mp.h.dim + h


def require_smashable(mp: MatchedPairData) -> None:
    rep = check_weak_matched_pair(mp)
    if not rep.ok:
        raise NotMatched(rep.failures()[0].line())
    if not check_abelian(mp):
        raise NotAbelian("H must be cocommutative and A commutative")
    comp = check_compatible(mp)
    if not comp.ok:
        raise NotCompatible(comp.failures()[0].line())


def build_ambient(mp: MatchedPairData, validate: bool = True) -> AmbientSmash:
    if validate:
        require_smashable(mp)
    H, A = as_wb(mp.h), as_wb(mp.a)
    T, R = mp.T, mp.R
    dA, dH = A.dim, H.dim
    N = dA * dH
    AM = contract("hab,ayc,xcz,bgk->xhygzk", H.D, T, A.M, H.M).reshape(N, N, N)
    AD = contract("xpq,hab,acy,qym->xhpcmb", A.D, H.D, R, A.M).reshape(N, N, N)
    ae = contract("x,h->xh", A.e, H.e).reshape(N)
    au = contract("x,h->xh", A.u, H.u).reshape(N)
    Pu = contract("uvw,v->uw", AM, au)
    Po = contract("uwq,q->uw", AD, ae)
    P = contract("uv,vw->uw", Pu, Po)
    r = CheckReport()
    r.compare("P_under_idempotent", contract("uv,vw->uw", Pu, Pu), Pu, 1)
    r.compare("P_over_idempotent", contract("uv,vw->uw", Po, Po), Po, 1)
    r.compare("projections_commute", P, contract("uv,vw->uw", Po, Pu), 1)
    r.compare("P_idempotent", contract("uv,vw->uw", P, P), P, 1)
    return AmbientSmash(mp, AM, AD, ae, au, Pu, Po, P, r)


def check_ambient_bialgebra(amb: AmbientSmash) -> CheckReport:
    """Associativity and multiplicative coproduct on the whole ambient space.

    Costs O(N⁶) for the coproduct check, so it is meant for small pairs.
    """
    AM, AD = amb.AM, amb.AD
    r = CheckReport()
    r.compare("ambient_associative", contract("uvm,mwz->uvwz", AM, AM),
              contract("vwm,umz->uvwz", AM, AM), 3)
    r.compare("ambient_coassociative", contract("uac,ajk->ujkc", AD, AD),
              contract("uja,akc->ujkc", AD, AD), 1)
    lhs = contract("uvm,mpq->uvpq", AM, AD)
    half = contract("uab,acp->ubcp", AD, AM)
    rhs = contract("ubcp,vcd,bdq->uvpq", half, AD, AM)
    r.compare("ambient_delta_multiplicative", lhs, rhs, 2)
    return r


@dataclass
class SmashProduct:
    ambient: AmbientSmash
    basis: Mat                      # N x r, columns are P(e_rep)
    reps: list[tuple[int, int]]     # representative (x, h) of each basis vector
    coords: Mat                     # r x N left inverse of basis
    wb: WeakBialgebra
    report: CheckReport = dc_field(default_factory=CheckReport)

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def mp(self) -> MatchedPairData:
        return self.ambient.mp

    def element(self, x: int, h: int) -> Tensor:
        """Coordinates of x##h = P(x#h) in the subspace basis."""
        u = self.ambient.index(x, h)
        return contract("w,kw->k", self.ambient.P[u], self.coords)

    def embed(self, coords: Tensor) -> Tensor:
        return contract("ai,i->a", self.basis, coords.reshape(coords.size))


def build_smash(mp: MatchedPairData, validate: bool = True) -> SmashProduct:
    amb = build_ambient(mp, validate)
    AM, AD, P = amb.AM, amb.AD, amb.P
    B, piv = image_basis(amb.projector())
    dH = mp.h.dim
    reps = [(u // dH, u % dH) for u in piv]
    L = left_inverse(B)
    Bt, Lt = B.T, L.T                      # Bt[i, a], Lt[w, k]
    r = CheckReport()
    r.extend(amb.report)
    # products and coproducts of basis vectors stay in the subspace
    prod = contract("ia,jb,abc->ijc", Bt, Bt, AM)
    r.compare("product_closed", prod, contract("ijc,cw->ijw", prod, P), 2)
    cop = contract("ia,abc->ibc", Bt, AD)
    cop_p = contract("ibc,bp,cq->ipq", cop, P, P)
    r.compare("coproduct_closed", cop, cop_p, 1)
    # the generator formulas on all ambient representatives factor through P
    PAM = contract("uvc,cw->uvw", AM, P)
    r.compare("product_factors_through_P", contract("ua,vb,abw->uvw", P, P, PAM), PAM, 2)
    PAD = contract("ubc,bp,cq->upq", AD, P, P)
    r.compare("coproduct_factors_through_P", contract("ua,apq->upq", P, PAD), PAD, 1)
    r.compare("counit_formula", contract("uw,w->u", P, amb.ae), smash_counit_formula(mp), 1)
    bad = [i for i in r.items if not i.passed and i.id.endswith(("through_P", "closed", "formula"))]
    if bad:
        raise WellDefinednessFailure(bad[0].line())
    Msub = contract("ijc,ck->ijk", contract("ijc,cw->ijw", prod, P), Lt)
    Dsub = contract("ipq,pj,qk->ijk", cop_p, Lt, Lt)
    usub = contract("v,vw,wk->k", amb.au, P, Lt)
    esub = contract("ia,a->i", Bt, amb.ae)
    labels = [f"{_lab(mp.a, x)}##{_lab(mp.h, h)}" for x, h in reps]
    wb = WeakBialgebra.from_tensors(Msub, usub, Dsub, esub, labels)
    return SmashProduct(amb, B, reps, L, wb, r)


def _lab(h, i):
    labels = as_wb(h).labels
    return labels[i] if labels else str(i)


def smash_counit_formula(mp: MatchedPairData) -> Tensor:
    """ε(x##h) = ε(x(h₁⁰·1)h₁¹(h₂·1)) as a tensor over ambient indices."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    v = mp.act.one_image
    first = contract("hab,aij,iw->hbwj", H.D, mp.R, v)              # h₁⁰·1, h₁¹, h₂
    first = contract("hbwj,bq->hwjq", first, v)                       # h₂·1
    chain = contract("xwm,mjn,nqo,o->xwjq", A.M, A.M, A.M, A.e)
    return contract("hwjq,xwjq->xh", first, chain).reshape(A.dim * H.dim)


def underline_coproduct_identity(mp: MatchedPairData) -> CheckReport:
    """x₁(h₁⁰·1)#h₂⁰ ⊗ x₂h₁¹h₂¹(h₃·1) = x₁(h₁·1)₁#h₂⁰ ⊗ x₂(h₁·1)₂h₂¹ in A⊗H⊗A."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    R, v, MA, DA = mp.R, mp.act.one_image, A.M, A.D
    left = contract("xst,iw,swp->xipt", DA, v, MA)                   # x₁(i·1), x₂
    legs = contract("habc,aij->hbcij", H.D3, R)                      # ρ(h₁) = i⊗j
    left = contract("hbcij,xipt->hxpbcjt", legs, left)
    left = contract("hxpbcjt,bqk->hxpcjtqk", left, R)                # ρ(h₂) = q⊗k
    left = contract("hxpcjtqk,cy->hxpjtqky", left, v)                # h₃·1
    chain = contract("tjm,mkn,nyr->tjkyr", MA, MA, MA)
    lhs = contract("hxpjtqky,tjkyr->xhpqr", left, chain)
    right = contract("hab,aw,wcd->hbcd", H.D, v, DA)                 # (h₁·1)₁ ⊗ (h₁·1)₂
    right = contract("xst,hbcd,scp->xhbpdt", DA, right, MA)
    right = contract("xhbpdt,bqk->xhpqdtk", right, R)
    rhs = contract("xhpqdtk,tdm,mkr->xhpqr", right, MA, MA)
    r = CheckReport()
    r.compare("underline_coproduct_identity", lhs, rhs, 2)
    return r


def counit_twist_identity(mp: MatchedPairData) -> CheckReport:
    """ε(h₁⁰)(h₂·1)h₁¹ = ε_t(h₁⁰·1)h₁¹(h₂·1) (H cocommutative)."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    R, v = mp.R, mp.act.one_image
    lhs = contract("hab,aij,i,bq,qjr->hr", H.D, R, H.e, v, A.M)
    t = contract("iw,wz->iz", v, A.Et)
    rhs = contract("hab,aij,iz,zjm,bq,mqr->hr", H.D, R, t, A.M, v, A.M)
    r = CheckReport()
    r.compare("counit_twist_identity", lhs, rhs, 1)
    return r


def counit_absorption(mp: MatchedPairData) -> CheckReport:
    """x₁(h₁⁰·1)ε(a x₂h₁¹(h₂·1)) = x₁(h⁰·1)ε(a x₂h¹), inputs (a, x, h)."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    R, v, MA, DA = mp.R, mp.act.one_image, A.M, A.D
    E = contract("amn,njo,oqk,k->amjq", MA, MA, MA, A.e)             # ε(a·m·j·q)
    head = contract("xst,iw,swp->xipt", DA, v, MA)
    lhs_h = contract("hcb,cij,bq->hijq", H.D, R, v)
    lhs = contract("xipt,hijq,atjq->axhp", head, lhs_h, E)
    E3 = contract("amn,njk,k->amj", MA, MA, A.e)                    # ε(a·m·j)
    rhs = contract("xipt,hij,atj->axhp", head, R, E3)
    r = CheckReport()
    r.compare("counit_absorption", lhs, rhs, 3)
    return r


def check_smash_bialgebra(sp: SmashProduct) -> CheckReport:
    """Everything needed for A##H to be a weak bialgebra, checked exactly."""
    r = CheckReport()
    r.extend(sp.report)
    sub = check_weak_bialgebra(sp.wb)
    r.extend(sub, "smash.")
    if sub.ok:
        r.extend(identity_suite(sp.wb), "smash_identity.")
    r.extend(underline_coproduct_identity(sp.mp))
    r.extend(counit_twist_identity(sp.mp))
    return r


# ---------------------------------------------------------------------------
# antipode


def _hopf_parts(mp):
    if not (isinstance(mp.h, WeakHopfAlgebra) and isinstance(mp.a, WeakHopfAlgebra)):
        raise PreconditionUnmet("both H and A need antipodes")
    return as_wb(mp.h), as_wb(mp.a), mp.h.S, mp.a.S


def check_antipode_conditions(mp: MatchedPairData) -> CheckReport:
    """The two conditions tying S_A, S_H to the action and coaction, plus the
    counit absorption identity they rely on."""
    H, A, SH, SA = _hopf_parts(mp)
    R, v, MA, MH = mp.R, mp.act.one_image, A.M, H.M
    dH, EsA, EtA = H.d1, A.Es, A.Et
    r = CheckReport()
    # (1₍₁₎h⁰·1) ⊗ S_A(h¹)ε_s(1₍₂₎¹) ⊗ 1₍₂₎⁰
    tail = contract("bcd,de->bce", R, EsA)                              # 1₍₂₎⁰, ε_s(1₍₂₎¹)
    lhs = contract("ab,hpy,apm,mX->hbXy", dH, R, MH, v)
    lhs = contract("hbXy,ys,bce,seY->hXYc", lhs, SA, tail, MA)
    # ε_t(1₍₁₎⁰h⁰·1) ⊗ ε_t(h¹)ε_s(1₍₂₎¹)1₍₁₎¹ ⊗ 1₍₂₎⁰
    rhs = contract("aij,hpy,ipm,mw->ajhwy", R, R, MH, v)
    rhs = contract("ajhwy,wX,ys->ajhXs", rhs, EtA, EtA)
    rhs = contract("ajhXs,ab,bce->hXjsce", rhs, dH, tail)
    rhs = contract("hXjsce,seu,ujY->hXYc", rhs, MA, MA)
    r.compare("antipode_condition_target", lhs, rhs, 1)
    # ε_s(h₁¹h₂¹)(S_H(h₁⁰)·1) ⊗ S_H(h₂⁰)h₃
    lhs = contract("habc,aij,bkl->hcikjl", H.D3, R, R)
    lhs = contract("hcikjl,jlm,ms->hciks", lhs, MA, EsA)
    sv = contract("ij,jw->iw", SH, v)                                   # S_H(i)·1
    lhs = contract("hciks,iw,swX->hckX", lhs, sv, MA)
    lhs = contract("hckX,kq,qcY->hXY", lhs, SH, MH)
    # ε_s(h¹1₍₂₎¹) ε_s(h⁰1₍₁₎·1) ⊗ 1₍₂₎⁰
    rhs = contract("hpy,ab,bcd,ydm,ms->hpacs", R, dH, R, MA, EsA)
    rhs = contract("hpacs,pak,kw,wt,stX->hXc", rhs, MH, v, EsA, MA)
    r.compare("antipode_condition_source", lhs, rhs, 1)
    r.extend(counit_absorption(mp))
    return r


def smash_antipode_formula(sp: SmashProduct) -> Tensor:
    """S(x##h) = (1##S_H(h⁰))(S_A(xh¹)##1) on every ambient representative: F[u, w]."""
    mp = sp.mp
    H, A, SH, SA = _hopf_parts(mp)
    amb = sp.ambient
    dA, dH = A.dim, H.dim
    P4 = amb.P.reshape(dA, dH, amb.dim)
    U1 = contract("a,apw->pw", A.u, P4)                 # P(1 # e_p)
    U2 = contract("zbw,b->zw", P4, H.u)                 # P(e_z # 1)
    left = contract("hpy,pq,qw->hyw", mp.R, SH, U1)     # 1##S_H(h⁰), with h¹ kept
    right = contract("xym,mz,zv->xyv", A.M, SA, U2)     # S_A(xh¹)##1
    prod = contract("hyw,xyv->xhwv", left, right).reshape(dA * dH, amb.dim, amb.dim)
    out = contract("uwv,wvc->uc", prod, amb.AM)
    return contract("uc,cw->uw", out, amb.P)


def build_antipode(sp: SmashProduct) -> WeakHopfAlgebra:
    """Antipode of A##H from the generator formula, checked to factor through P."""
    F = smash_antipode_formula(sp)
    Lt = sp.coords.T
    G = contract("uw,wk->uk", F, Lt)
    # F must already lie in the subspace
    back = contract("uk,ak->ua", G, sp.basis)
    if not back == F:
        raise WellDefinednessFailure("antipode formula leaves the subspace")
    reps = [sp.ambient.index(x, h) for x, h in sp.reps]
    S = Tensor.from_values(sp.wb.field, [G[u].raw_values() for u in reps]) if reps else G
    C = contract("uw,wi->ui", sp.ambient.P, Lt)
    if not contract("ui,ik->uk", C, S) == G:
        raise WellDefinednessFailure("antipode formula does not factor through the projection")
    return verify_antipode(sp.wb, S.T)


def smash_is_hopf(sp: SmashProduct) -> bool:
    from .coreops import hopf_criterion
    return hopf_criterion(build_antipode(sp))[0]
