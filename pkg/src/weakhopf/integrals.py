"""Integrals: left ones satisfy hα = ε_t(h)α, right ones αh = αε_s(h).

Semisimplicity is tested through the normalized-integral criterion: H is
semisimple iff some left integral α has ε_t(α) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .coreops import CheckReport, as_wb
from .errors import ConditionFails, NotAnIntegral, PreconditionUnmet
from .linalg import Mat, Tensor, contract, kernel_basis, solve, stack_cols
from .matched import MatchedPairData


@dataclass(frozen=True)
class IntegralSpace:
    side: str
    basis: Mat      # columns
    parent: object

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, vec: Tensor) -> bool:
        return integral_defect(self.parent, vec, self.side).is_zero()


def _system(h, side: str) -> Tensor:
    """K[i, m, a]: coefficient of α_a in the m-th entry of the defect at e_i."""
    wb = as_wb(h)
    M = wb.M
    if side == "left":
        return contract("iam->ima", M) - contract("ij,jam->ima", wb.Et, M)
    if side == "right":
        return contract("aim->ima", M) - contract("ij,ajm->ima", wb.Es, M)
    raise ValueError(f"side must be left or right, not {side!r}")


def integral_space(h, side: str = "left") -> IntegralSpace:
    wb = as_wb(h)
    wb.require_valid()
    n = wb.dim
    K = _system(wb, side).reshape(n * n, n)
    return IntegralSpace(side, kernel_basis(K), h)


def integral_defect(h, alpha: Tensor, side: str = "left") -> Tensor:
    """hα − ε_t(h)α (or αh − αε_s(h)) for every basis h: zero iff α is an integral."""
    return contract("ima,a->im", _system(h, side), alpha.reshape(alpha.size))


def maschke_semisimple(h) -> tuple[bool, Tensor | None]:
    """Is there a left integral α with ε_t(α) = 1?  Returns the witness α if so."""
    wb = as_wb(h)
    space = integral_space(h, "left")
    if space.dim == 0:
        return False, None
    # ε_t(basis c) = 1
    A = wb.Et.T @ space.basis
    sol = solve(A, wb.u.reshape(wb.dim, 1))
    if sol is None:
        return False, None
    alpha = (space.basis @ sol).reshape(wb.dim)
    return True, alpha


def check_action_stability(mp: MatchedPairData, alpha: Tensor) -> CheckReport:
    """h·α is again a left integral of A for every basis element h."""
    A = mp.a
    alpha = alpha.reshape(alpha.size)
    if not integral_defect(A, alpha).is_zero():
        raise NotAnIntegral("α is not a left integral of A")
    moved = contract("hab,a->hb", mp.T, alpha)
    K = _system(A, "left")
    r = CheckReport()
    r.compare("action_preserves_integrals", contract("ima,ha->him", K, moved),
              Tensor.zeros(A.field, (mp.h.dim, A.dim, A.dim)), 1)
    return r


def check_integral_condition(mp: MatchedPairData, alpha: Tensor, t: Tensor) -> CheckReport:
    """(h·α)ε_s(t₁¹(t₂·1))⊗t₁⁰ = (h⁰·1)ε_s(h¹)α ε_s(t₁¹(t₂·1))⊗t₁⁰ for all basis h."""
    H, A = as_wb(mp.h), as_wb(mp.a)
    R, T, v, MA, Es = mp.R, mp.T, mp.act.one_image, A.M, A.Es
    alpha, t = alpha.reshape(A.dim), t.reshape(H.dim)
    W = contract("t,tab,acy,bq,yqm,ms->sc", t, H.D, R, v, MA, Es)     # ε_s(t₁¹(t₂·1)) ⊗ t₁⁰
    ha = contract("hab,a->hb", T, alpha)
    lhs = contract("hb,sc,bsX->hXc", ha, W, MA)
    front = contract("hpy,pw,yz,wzm->hm", R, v, Es, MA)               # (h⁰·1)ε_s(h¹)
    front = contract("hm,a,mak->hk", front, alpha, MA)
    rhs = contract("hk,sc,ksX->hXc", front, W, MA)
    r = CheckReport()
    r.compare("smash_integral_condition", lhs, rhs, 1)
    return r


def smash_integral(sp, alpha: Tensor, t: Tensor) -> Tensor:
    """Coordinates of α##t, after checking the condition and membership."""
    mp = sp.mp
    alpha, t = alpha.reshape(mp.a.dim), t.reshape(mp.h.dim)
    if not integral_defect(mp.a, alpha).is_zero():
        raise NotAnIntegral("α is not a left integral of A")
    if not integral_defect(mp.h, t).is_zero():
        raise NotAnIntegral("t is not a left integral of H")
    cond = check_integral_condition(mp, alpha, t)
    if not cond.ok:
        bad = cond.failures()[0]
        raise ConditionFails(bad.line(), bad.witness)
    amb = sp.ambient
    vec = contract("x,h->xh", alpha, t).reshape(amb.dim)
    coords = contract("u,uw,wk->k", vec, amb.P, sp.coords.T)
    if not integral_defect(sp.wb, coords).is_zero():
        raise NotAnIntegral("α##t is not a left integral of the smash product")
    return coords


def _criterion_value(sp, alpha: Tensor, t: Tensor) -> Tensor:
    """Coordinates of ε_t(α)S(t¹)(t⁰·1)##1."""
    mp = sp.mp
    A, H = mp.a, as_wb(mp.h)
    SA = A.S
    eta = contract("a,ab->b", alpha, as_wb(A).Et)
    x = contract("t,tpy,ys,pw,b,bsm,mwn->n", t, mp.R, SA, mp.act.one_image, eta,
                 as_wb(A).M, as_wb(A).M)
    amb = sp.ambient
    vec = contract("x,h->xh", x, H.u).reshape(amb.dim)
    return contract("u,uw,wk->k", vec, amb.P, sp.coords.T)


def smash_semisimple_criterion(sp) -> tuple[bool, tuple | None]:
    """Search for α ∈ ∫_ℓ(A), t ∈ ∫_ℓ(H) with ε_t(α)S(t¹)(t⁰·1)##1 = 1##1.

    The map (α, t) -> value is bilinear.  Its linearization decides when no
    solution can exist; otherwise candidates are tried by fixing one factor
    to a basis vector (then the other is found by a linear solve) and finally
    over a small grid of integer combinations.
    """
    mp = sp.mp
    if not hasattr(mp.a, "S"):
        raise PreconditionUnmet("A needs an antipode")
    IA, IH = integral_space(mp.a), integral_space(mp.h)
    if IA.dim == 0 or IH.dim == 0:
        return False, None
    target = sp.wb.u                     # coordinates of 1##1
    ba = [IA.basis.column(i).reshape(mp.a.dim) for i in range(IA.dim)]
    bt = [IH.basis.column(j).reshape(mp.h.dim) for j in range(IH.dim)]
    table = {(i, j): _criterion_value(sp, a, t) for i, a in enumerate(ba) for j, t in enumerate(bt)}
    r = sp.dim
    lin = stack_cols([table[k].reshape(r, 1) for k in sorted(table)])
    if solve(lin, target.reshape(r, 1)) is None:
        return False, None

    def combo(basis, coeffs):
        out = basis[0].scale(coeffs[0])
        for b, c in zip(basis[1:], coeffs[1:]):
            out = out + b.scale(c)
        return out

    # fix t to a basis vector, solve for α (and symmetrically)
    for j, t in enumerate(bt):
        m = stack_cols([table[(i, j)].reshape(r, 1) for i in range(len(ba))])
        c = solve(m, target.reshape(r, 1))
        if c is not None:
            return True, (combo(ba, c.raw_values()), t)
    for i, a in enumerate(ba):
        m = stack_cols([table[(i, j)].reshape(r, 1) for j in range(len(bt))])
        c = solve(m, target.reshape(r, 1))
        if c is not None:
            return True, (a, combo(bt, c.raw_values()))
    grid = [0, 1, -1, 2]
    for ca in product(grid, repeat=len(ba)):
        if not any(ca):
            continue
        a = combo(ba, ca)
        m = stack_cols([_criterion_value(sp, a, t).reshape(r, 1) for t in bt])
        c = solve(m, target.reshape(r, 1))
        if c is not None:
            return True, (a, combo(bt, c.raw_values()))
    return False, None


def smash_semisimplicity_agrees(sp) -> tuple[bool, bool]:
    """(criterion result, Maschke result on the smash product itself)."""
    crit, _ = smash_semisimple_criterion(sp)
    direct, _ = maschke_semisimple(sp.wb)
    return crit, direct
