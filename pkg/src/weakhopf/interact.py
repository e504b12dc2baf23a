"""Module algebras and comodule coalgebras over weak bialgebras.

An ``ActionData`` is a left action H⊗A -> A (side "left") or a right action
A⊗H -> A (side "right").  A ``CoactionData`` is a right coaction C -> C⊗A
(side "right") or a left coaction C -> A⊗C (side "left"); here ``h`` is the
coacted coalgebra and ``a`` the coacting algebra.

Right-handed structures are never checked by separate code.  ``mirror_*``
turns them into left-handed ones over the op-cop structures (reversing the
order of every tensor product and every product) and the left-side checker
runs on the result.

Tensors (input-first):
    left action   T[h, a, b]    h·e_a = sum_b T e_b
    right action  T[a, h, b]    e_a↼h = sum_b T e_b
    right coaction R[h, p, x]   ρ(e_h) = sum R e_p ⊗ f_x
    left coaction  R[h, x, p]   ρ(e_h) = sum R f_x ⊗ e_p
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .coreops import (CheckReport, WeakBialgebra, WeakHopfAlgebra, as_wb)
from .errors import ConsistencyError, DimensionMismatch, FieldMismatch, InvalidLambda, InvalidZ
from .linalg import Mat, Tensor, contract, identity
from .zoo import dual as dual_structure


def _vec(h, v, n: int, name: str) -> Tensor:
    if isinstance(v, Tensor):
        t = v.reshape(v.size)
    else:
        t = Tensor.from_values(h.field, list(v))
    if t.shape != (n,):
        raise DimensionMismatch(f"{name} must have {n} entries, got {t.shape}")
    if t.field != h.field:
        raise FieldMismatch(f"{name}: {t.field} vs {h.field}")
    return t


@dataclass(frozen=True)
class ActionData:
    h: object     # acting weak bialgebra (or weak Hopf algebra)
    a: object     # acted-upon algebra, given as a weak bialgebra
    act: Mat
    side: str = "left"

    def __post_init__(self):
        dh, da = self.h.dim, self.a.dim
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be left or right, not {self.side!r}")
        if self.act.shape != (da, dh * da):
            raise DimensionMismatch(f"action shape {self.act.shape}, expected {(da, dh * da)}")
        if not (self.h.field == self.a.field == self.act.field):
            raise FieldMismatch("action over mixed fields")

    @cached_property
    def T(self) -> Tensor:
        dh, da = self.h.dim, self.a.dim
        if self.side == "left":
            return self.act.reshape(da, dh, da).transpose(1, 2, 0)
        return self.act.reshape(da, da, dh).transpose(1, 2, 0)

    @classmethod
    def from_tensor(cls, h, a, T: Tensor, side: str = "left") -> "ActionData":
        da = a.dim
        return cls(h, a, T.transpose(2, 0, 1).reshape(da, T.shape[0] * T.shape[1]), side)

    @cached_property
    def one_image(self) -> Tensor:
        """v[h, b]: h·1_A (left side only)."""
        return contract("a,hab->hb", as_wb(self.a).u, self.T)


@dataclass(frozen=True)
class CoactionData:
    h: object     # coacted coalgebra
    a: object     # coacting algebra
    coact: Mat
    side: str = "right"

    def __post_init__(self):
        dh, da = self.h.dim, self.a.dim
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be left or right, not {self.side!r}")
        if self.coact.shape != (dh * da, dh):
            raise DimensionMismatch(f"coaction shape {self.coact.shape}, expected {(dh * da, dh)}")
        if not (self.h.field == self.a.field == self.coact.field):
            raise FieldMismatch("coaction over mixed fields")

    @cached_property
    def R(self) -> Tensor:
        dh, da = self.h.dim, self.a.dim
        if self.side == "right":
            return self.coact.reshape(dh, da, dh).transpose(2, 0, 1)
        return self.coact.reshape(da, dh, dh).transpose(2, 0, 1)

    @classmethod
    def from_tensor(cls, h, a, R: Tensor, side: str = "right") -> "CoactionData":
        dh = h.dim
        return cls(h, a, R.transpose(1, 2, 0).reshape(R.shape[1] * R.shape[2], dh), side)


# ---------------------------------------------------------------------------
# mirroring


def opcop(h):
    """Reverse products and coproducts: M(a,b) -> M(b,a), Δ -> τΔ."""
    wb = as_wb(h)
    out = WeakBialgebra.from_tensors(wb.M.transpose(1, 0, 2), wb.u, wb.D.transpose(0, 2, 1), wb.e,
                                     wb.labels)
    if isinstance(h, WeakHopfAlgebra):
        return WeakHopfAlgebra(out, h.antipode)
    return out


def mirror_action(act: ActionData) -> ActionData:
    """A right action of H on A read as a left action of H^opcop on A^opcop (and back)."""
    side = "left" if act.side == "right" else "right"
    if act.side == "right":
        T = act.T.transpose(1, 0, 2)          # [a,h,b] -> [h,a,b]
    else:
        T = act.T.transpose(1, 0, 2)          # [h,a,b] -> [a,h,b]
    return ActionData.from_tensor(opcop(act.h), opcop(act.a), T, side)


def mirror_coaction(co: CoactionData) -> CoactionData:
    side = "right" if co.side == "left" else "left"
    R = co.R.transpose(0, 2, 1)
    return CoactionData.from_tensor(opcop(co.h), opcop(co.a), R, side)


# ---------------------------------------------------------------------------
# module algebras


def check_module_algebra(act: ActionData) -> CheckReport:
    """Unit, product, associativity and unit-image conditions of a module algebra,
    plus the two absorption consequences for H_t and H_s."""
    if act.side == "right":
        return check_module_algebra(mirror_action(act))
    H, A = as_wb(act.h), as_wb(act.a)
    T = act.T
    MA, MH = A.M, H.M
    r = CheckReport()
    r.compare("unit_acts_trivially", contract("h,hab->ab", H.u, T), identity(A.dim, A.field), 1)
    r.compare("action_on_products", contract("abm,hmn->habn", MA, T),
              contract("hpq,pac,qbd,cdn->habn", H.D, T, T, MA), 3)
    r.compare("action_associative", contract("kab,hbc->hkac", T, T), contract("hkm,mac->hkac", MH, T), 3)
    r.compare("action_on_unit", act.one_image, contract("hj,a,jab->hb", H.Et, A.u, T), 1)
    if not r.ok:
        return r
    r.compare("target_part_absorbs_left", contract("ij,jac,cbm->iabm", H.Et, T, MA),
              contract("ij,abc,jcm->iabm", H.Et, MA, T), 3)
    r.compare("source_part_absorbs_right", contract("ij,jbc,acm->iabm", H.Es, T, MA),
              contract("ij,abc,jcm->iabm", H.Es, MA, T), 3)
    if not r.ok:
        raise ConsistencyError("module algebra axioms hold but a consequence fails: "
                               + r.failures()[0].line())
    return r


def check_comodule_coalgebra(co: CoactionData) -> CheckReport:
    if co.side == "left":
        return check_comodule_coalgebra(mirror_coaction(co))
    H, A = as_wb(co.h), as_wb(co.a)
    R = co.R
    r = CheckReport()
    r.compare("coaction_counit", contract("hpx,x->hp", R, A.e), identity(H.dim, H.field), 1)
    r.compare("coaction_on_coproducts", contract("hpx,pab->habx", R, H.D),
              contract("hcd,cay,dbz,yzx->habx", H.D, R, R, A.M), 1)
    r.compare("coaction_coassociative", contract("hpx,pqy->hqyx", R, R),
              contract("hpx,xyz->hpyz", R, A.D), 1)
    r.compare("coaction_counit_source", contract("hpx,p->hx", R, H.e),
              contract("hpx,p,xy->hy", R, H.e, A.Es), 1)
    return r


# ---------------------------------------------------------------------------
# standard actions and coactions


def lambda_conditions(h, lam) -> CheckReport:
    H = as_wb(h)
    lam = _vec(H, lam, H.dim, "lambda")
    r = CheckReport()
    one = Tensor.from_values(H.field, [1])
    r.compare("lambda_unital", contract("h,h->", lam, H.u).reshape(1), one, 0)
    r.compare("lambda_grouplike", contract("hab,a,b->h", H.D, lam, lam), lam, 1)
    r.compare("lambda_multiplicative", contract("h,k->hk", lam, lam), contract("hkm,m->hk", H.M, lam), 2)
    return r


def lambda_action_unchecked(h, target, lam) -> ActionData:
    """h·a = λ(h)a without validating λ."""
    lam = _vec(as_wb(h), lam, h.dim, "lambda")
    T = contract("h,ab->hab", lam, identity(target.dim, target.field))
    return ActionData.from_tensor(h, target, T)


def make_lambda_action(h, target, lam) -> ActionData:
    """The action h·a = λ(h)a for λ unital, grouplike and multiplicative."""
    rep = lambda_conditions(h, lam)
    if not rep.ok:
        raise InvalidLambda(rep.failures()[0].line())
    act = lambda_action_unchecked(h, target, lam)
    ma = check_module_algebra(act)
    if not ma.ok:
        if isinstance(h, WeakHopfAlgebra):
            raise ConsistencyError("valid λ on a weak Hopf algebra gave no module algebra: "
                                   + ma.failures()[0].line())
        raise InvalidLambda("λ passes its conditions but " + ma.failures()[0].line())
    return act


def z_conditions(target, z) -> CheckReport:
    A = as_wb(target)
    z = _vec(A, z, A.dim, "z")
    r = CheckReport()
    one = Tensor.from_values(A.field, [1])
    r.compare("z_counit_one", contract("x,x->", z, A.e).reshape(1), one, 0)
    r.compare("z_idempotent", contract("a,b,abc->c", z, z, A.M), z, 0)
    r.compare("z_grouplike", contract("x,xpq->pq", z, A.D), contract("p,q->pq", z, z), 0)
    return r


def z_coaction_unchecked(h, target, z) -> CoactionData:
    z = _vec(as_wb(target), z, target.dim, "z")
    R = contract("hp,x->hpx", identity(h.dim, h.field), z)
    return CoactionData.from_tensor(h, target, R)


def make_z_coaction(h, target, z) -> CoactionData:
    """ρ(h) = h⊗z for z with ε(z) = 1, z² = z and Δ(z) = z⊗z."""
    rep = z_conditions(target, z)
    if not rep.ok:
        raise InvalidZ(rep.failures()[0].line())
    co = z_coaction_unchecked(h, target, z)
    cc = check_comodule_coalgebra(co)
    if not cc.ok:
        raise ConsistencyError("valid z gave no comodule coalgebra: " + cc.failures()[0].line())
    return co


def regular_action(h) -> ActionData:
    """H acting on itself by left multiplication."""
    return ActionData.from_tensor(h, h, as_wb(h).M)


def regular_coaction(h) -> CoactionData:
    """H coacting on itself by its coproduct."""
    return CoactionData.from_tensor(h, h, as_wb(h).D)


def trivial_action(h, target) -> ActionData:
    """h·a = ε(h)a."""
    return ActionData.from_tensor(h, target, contract("h,ab->hab", as_wb(h).e,
                                                      identity(target.dim, target.field)))


def trivial_coaction(h, target) -> CoactionData:
    """ρ(h) = h⊗1."""
    return CoactionData.from_tensor(h, target, contract("hp,x->hpx", identity(h.dim, h.field),
                                                        as_wb(target).u))


def lambda_image(h, lam) -> Tensor:
    """Columns spanning H_λ = {λ(h₁)h₂}: tensor L[h, k]."""
    H = as_wb(h)
    lam = _vec(H, lam, H.dim, "lambda")
    return contract("hab,a->hb", H.D, lam)


# ---------------------------------------------------------------------------
# duality


def dual_coaction_from_action(act: ActionData) -> CoactionData:
    """Transpose an action into a coaction between the duals.

    A left H-action on A gives the left H*-coaction ρ(f) = Σ h_i*⊗(f↼ĥ_i) on A*,
    where (f↼ĥ)(x) = f(h·x).  A right action gives a right coaction.
    """
    hs, as_ = dual_structure(act.h), dual_structure(act.a)
    if act.side == "left":
        R = act.T.transpose(2, 0, 1)       # Rl[b, h, a] = T[h, a, b]
        return CoactionData.from_tensor(as_, hs, R, "left")
    R = act.T.transpose(2, 0, 1)           # R[b, a, h] = T[a, h, b]
    return CoactionData.from_tensor(as_, hs, R, "right")


def dual_action_from_coaction(co: CoactionData) -> ActionData:
    """Transpose a coaction into an action between the duals.

    A right coaction ρ(h) = h⁰⊗h¹ of A on H gives the right A*-action on H*
    (φ↼f)(h) = f(h¹)φ(h⁰); a left coaction gives a left action f▷c = f(c⁻¹)c⁰.
    """
    hs, as_ = dual_structure(co.h), dual_structure(co.a)
    T = co.R.transpose(1, 2, 0)            # [p, x, c] = R[c, p, x]
    if co.side == "right":
        return ActionData.from_tensor(as_, hs, T, "right")
    return ActionData.from_tensor(as_, hs, T, "left")
