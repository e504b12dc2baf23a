"""Weak bialgebras and weak Hopf algebras given by structure constants.

Public maps are ``Mat`` objects of shape (dim out, dim in).  Every check is
written with *input-first* structure tensors so Sweedler formulas turn into
einsum subscripts directly:

    M[i, j, k]   e_i e_j = sum_k M[i,j,k] e_k
    u[k]         1 = sum_k u[k] e_k
    D[i, j, k]   Δ(e_i) = sum D[i,j,k] e_j ⊗ e_k
    e[i]         ε(e_i)
    S[i, j]      S(e_i) = sum_j S[i,j] e_j

Check results are ``CheckReport`` objects: one item per identity with the
first failing basis tuple and the exact residual.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import (AntipodeAxiomFailure, DimensionMismatch, FieldMismatch,
                     InvalidStructure, NoAntipode, Underdetermined)
from .linalg import Mat, Tensor, contract, identity, kernel_basis, rank, solve, stack_rows
from .scalars import Field, Scalar


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckItem:
    id: str
    passed: bool
    witness: tuple[int, ...] | None = None
    residual: tuple[Scalar, ...] | None = None

    def to_json(self) -> dict:
        out = {"id": self.id, "pass": self.passed}
        if not self.passed:
            out["witness"] = list(self.witness) if self.witness is not None else None
            out["residual"] = [str(s) for s in self.residual] if self.residual else []
        return out

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.id}"
        res = ", ".join(str(s) for s in self.residual or ())
        return f"FAIL {self.id} at {self.witness}: residual [{res}]"


@dataclass
class CheckReport:
    items: list[CheckItem] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.passed for i in self.items)

    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if not i.passed]

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, check_id: str) -> CheckItem:
        for i in self.items:
            if i.id == check_id:
                return i
        raise KeyError(check_id)

    def ids(self) -> list[str]:
        return [i.id for i in self.items]

    def compare(self, check_id: str, lhs: Tensor, rhs: Tensor, n_in: int) -> bool:
        """Record lhs == rhs where the first ``n_in`` axes index the inputs."""
        if lhs.shape != rhs.shape:
            raise DimensionMismatch(f"{check_id}: shapes {lhs.shape} vs {rhs.shape}")
        diff = lhs - rhs
        idx = diff.nonzero_index()
        if idx is None:
            self.items.append(CheckItem(check_id, True))
            return True
        wit = idx[:n_in]
        sub = diff[wit] if wit else diff
        residual = tuple(Scalar(diff.field, v) for v in sub.raw_values()) \
            if isinstance(sub, Tensor) else (sub,)
        self.items.append(CheckItem(check_id, False, wit, residual))
        return False

    def flag(self, check_id: str, passed: bool, witness=None) -> bool:
        """Record a yes/no property that has no numeric residual."""
        self.items.append(CheckItem(check_id, bool(passed),
                                    None if passed else tuple(witness or ()),
                                    None if passed else ()))
        return bool(passed)

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for i in other.items:
            self.items.append(CheckItem(prefix + i.id, i.passed, i.witness, i.residual))
        return self

    def to_json(self) -> list[dict]:
        return [i.to_json() for i in self.items]

    def lines(self) -> list[str]:
        return [i.line() for i in self.items]


# ---------------------------------------------------------------------------
# data


def _same_field(*ts):
    f = ts[0].field
    for t in ts[1:]:
        if t.field != f:
            raise FieldMismatch(f"{f} vs {t.field}")
    return f


@dataclass(frozen=True)
class FDAlgebraData:
    mult: Mat   # dim x dim^2
    unit: Mat   # dim x 1

    def __post_init__(self):
        _same_field(self.mult, self.unit)
        n = self.mult.shape[0]
        if self.mult.shape != (n, n * n) or self.unit.shape != (n, 1):
            raise DimensionMismatch(f"algebra shapes {self.mult.shape}, {self.unit.shape}")

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @property
    def field(self) -> Field:
        return self.mult.field

    @cached_property
    def M(self) -> Tensor:
        n = self.dim
        return self.mult.reshape(n, n, n).transpose(1, 2, 0)

    @cached_property
    def u(self) -> Tensor:
        return self.unit.reshape(self.dim)

    @classmethod
    def from_tensors(cls, M: Tensor, u: Tensor) -> "FDAlgebraData":
        n = u.shape[0]
        return cls(M.transpose(2, 0, 1).reshape(n, n * n), u.reshape(n, 1))


@dataclass(frozen=True)
class FDCoalgebraData:
    comult: Mat   # dim^2 x dim
    counit: Mat   # 1 x dim

    def __post_init__(self):
        _same_field(self.comult, self.counit)
        n = self.comult.shape[1]
        if self.comult.shape != (n * n, n) or self.counit.shape != (1, n):
            raise DimensionMismatch(f"coalgebra shapes {self.comult.shape}, {self.counit.shape}")

    @property
    def dim(self) -> int:
        return self.comult.shape[1]

    @property
    def field(self) -> Field:
        return self.comult.field

    @cached_property
    def D(self) -> Tensor:
        n = self.dim
        return self.comult.reshape(n, n, n).transpose(2, 0, 1)

    @cached_property
    def e(self) -> Tensor:
        return self.counit.reshape(self.dim)

    @classmethod
    def from_tensors(cls, D: Tensor, e: Tensor) -> "FDCoalgebraData":
        n = e.shape[0]
        return cls(D.transpose(1, 2, 0).reshape(n * n, n), e.reshape(1, n))


@dataclass(frozen=True)
class WeakBialgebra:
    alg: FDAlgebraData
    coalg: FDCoalgebraData
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.alg.dim != self.coalg.dim:
            raise DimensionMismatch(f"algebra dim {self.alg.dim} != coalgebra dim {self.coalg.dim}")
        if self.alg.field != self.coalg.field:
            raise FieldMismatch(f"{self.alg.field} vs {self.coalg.field}")
        if self.labels is not None and len(self.labels) != self.alg.dim:
            raise DimensionMismatch("wrong number of labels")

    @classmethod
    def from_tensors(cls, M, u, D, e, labels=None) -> "WeakBialgebra":
        return cls(FDAlgebraData.from_tensors(M, u), FDCoalgebraData.from_tensors(D, e),
                   tuple(labels) if labels is not None else None)

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def field(self) -> Field:
        return self.alg.field

    @property
    def wb(self) -> "WeakBialgebra":
        return self

    # structure tensors
    @property
    def M(self) -> Tensor:
        return self.alg.M

    @property
    def u(self) -> Tensor:
        return self.alg.u

    @property
    def D(self) -> Tensor:
        return self.coalg.D

    @property
    def e(self) -> Tensor:
        return self.coalg.e

    @cached_property
    def E2(self) -> Tensor:
        """E2[x, y] = ε(e_x e_y)."""
        return contract("xyc,c->xy", self.M, self.e)

    @cached_property
    def d1(self) -> Tensor:
        """Δ(1) as a tensor d1[a, b]."""
        return contract("i,ijk->jk", self.u, self.D)

    @cached_property
    def D3(self) -> Tensor:
        """Δ²(e_h) = D3[h, a, b, c] (h₁, h₂, h₃)."""
        return contract("hak,kbc->habc", self.D, self.D)

    @cached_property
    def Et(self) -> Tensor:
        """ε_t(h) = ε(1₁h)1₂, input-first."""
        return contract("aj,ah->hj", self.d1, self.E2)

    @cached_property
    def Es(self) -> Tensor:
        """ε_s(h) = 1₁ε(h1₂)."""
        return contract("ab,hb->ha", self.d1, self.E2)

    @cached_property
    def Esp(self) -> Tensor:
        """ε_s'(h) = ε(h1₁)1₂."""
        return contract("ab,ha->hb", self.d1, self.E2)

    @cached_property
    def report(self) -> CheckReport:
        return check_weak_bialgebra(self)

    @property
    def is_valid(self) -> bool:
        return self.report.ok

    def require_valid(self):
        if not self.is_valid:
            bad = self.report.failures()[0]
            raise InvalidStructure(f"not a weak bialgebra: {bad.line()}")


@dataclass(frozen=True)
class WeakHopfAlgebra:
    wb: WeakBialgebra
    antipode: Mat   # dim x dim

    def __post_init__(self):
        n = self.wb.dim
        if self.antipode.shape != (n, n):
            raise DimensionMismatch(f"antipode shape {self.antipode.shape}")
        if self.antipode.field != self.wb.field:
            raise FieldMismatch(f"{self.antipode.field} vs {self.wb.field}")

    @property
    def dim(self) -> int:
        return self.wb.dim

    @property
    def field(self) -> Field:
        return self.wb.field

    @property
    def labels(self):
        return self.wb.labels

    @cached_property
    def S(self) -> Tensor:
        return self.antipode.T

    def __getattr__(self, name):
        # structure tensors and derived maps are shared with the bialgebra
        if name in ("M", "u", "D", "e", "E2", "d1", "D3", "Et", "Es", "Esp", "alg", "coalg",
                    "report", "is_valid", "require_valid"):
            return getattr(self.wb, name)
        raise AttributeError(name)


def as_wb(x) -> WeakBialgebra:
    return x.wb if isinstance(x, WeakHopfAlgebra) else x


def antipode_tensor(h) -> Tensor:
    return h.S if isinstance(h, WeakHopfAlgebra) else None


# ---------------------------------------------------------------------------
# axioms


def check_algebra(alg_or_wb) -> CheckReport:
    M, u = alg_or_wb.M, alg_or_wb.u
    n = u.shape[0]
    r = CheckReport()
    r.compare("associativity", contract("ijm,mkl->ijkl", M, M), contract("jkm,iml->ijkl", M, M), 3)
    I = identity(n, M.field)
    r.compare("unit_left", contract("i,ijk->jk", u, M), I, 1)
    r.compare("unit_right", contract("j,ijk->ik", u, M), I, 1)
    return r


def check_coalgebra(coalg_or_wb) -> CheckReport:
    D, e = coalg_or_wb.D, coalg_or_wb.e
    n = e.shape[0]
    r = CheckReport()
    r.compare("coassociativity", contract("iac,ajk->ijkc", D, D), contract("ija,akc->ijkc", D, D), 1)
    I = identity(n, D.field)
    r.compare("counit_left", contract("iab,a->ib", D, e), I, 1)
    r.compare("counit_right", contract("iab,b->ia", D, e), I, 1)
    return r


def check_weak_bialgebra(wb) -> CheckReport:
    """Algebra, coalgebra and the three weak bialgebra axioms."""
    wb = as_wb(wb)
    r = CheckReport()
    r.extend(check_algebra(wb))
    r.extend(check_coalgebra(wb))
    M, D, E2, d = wb.M, wb.D, wb.E2, wb.d1
    # Δ(hk) = Δ(h)Δ(k)
    r.compare("delta_multiplicative", contract("hkm,mpq->hkpq", M, D),
              contract("hab,kcd,acp,bdq->hkpq", D, D, M, M), 2)
    # ε(hkl) = ε(hk₁)ε(k₂l) = ε(hk₂)ε(k₁l)
    triple = contract("hka,al->hkl", M, E2)
    r.compare("weak_counit_k1_k2", triple, contract("kab,ha,bl->hkl", D, E2, E2), 3)
    r.compare("weak_counit_k2_k1", triple, contract("kab,hb,al->hkl", D, E2, E2), 3)
    # (1⊗Δ(1))(Δ(1)⊗1) = Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1))
    dd = contract("ac,ajk->jkc", d, D)
    r.compare("weak_unit_outer", contract("ab,cf,cbm->amf", d, d, M), dd, 0)
    r.compare("weak_unit_inner", contract("ab,cf,bcm->amf", d, d, M), dd, 0)
    return r


def _require(wb):
    wb = as_wb(wb)
    wb.require_valid()
    return wb


def eps_t(wb) -> Mat:
    """Target counital map ε_t(h) = ε(1₁h)1₂."""
    return _require(wb).Et.T


def eps_s(wb) -> Mat:
    """Source counital map ε_s(h) = 1₁ε(h1₂)."""
    return _require(wb).Es.T


def eps_s_prime(wb) -> Mat:
    """ε_s'(h) = ε(h1₁)1₂."""
    return _require(wb).Esp.T


def target_subalgebra(wb) -> Mat:
    """Basis (columns) of H_t = image of ε_t."""
    from .linalg import image_basis
    return image_basis(eps_t(wb))[0]


def source_subalgebra(wb) -> Mat:
    from .linalg import image_basis
    return image_basis(eps_s(wb))[0]


def is_commutative(h) -> bool:
    M = h.M
    return M == M.transpose(1, 0, 2)


def is_cocommutative(h) -> bool:
    D = h.D
    return D == D.transpose(0, 2, 1)


def _delta2_one(wb):
    return contract("ac,ajk->jkc", wb.d1, wb.D)


def identity_suite(h) -> CheckReport:
    """Consequences of the axioms, each checked on all basis tuples.

    With an antipode the antipode identities are included as well.
    """
    wb = _require(h)
    M, D, E2, d, Et, Es, Esp = wb.M, wb.D, wb.E2, wb.d1, wb.Et, wb.Es, wb.Esp
    n = wb.dim
    I = identity(n, wb.field)
    r = CheckReport()
    r.compare("eps_t_idempotent", contract("hj,jk->hk", Et, Et), Et, 1)
    r.compare("eps_s_idempotent", contract("hj,jk->hk", Es, Es), Es, 1)
    r.compare("eps_t_h1_h2", contract("hab,ac,cbk->hk", D, Et, M), I, 1)
    r.compare("h1_eps_s_h2", contract("hab,bc,ack->hk", D, Es, M), I, 1)
    r.compare("counit_absorbs_eps_t", contract("kj,hj->hk", Et, E2), E2, 2)
    r.compare("counit_absorbs_eps_s", contract("hj,jk->hk", Es, E2), E2, 2)
    r.compare("unit_coproduct_in_source_target", contract("ab,ac,bd->cd", d, Es, Et), d, 0)
    cop_t = contract("hab,bc->hac", D, Et)
    r.compare("coproduct_eps_t_second_leg", cop_t, contract("ab,ahm->hmb", d, M), 1)
    r.compare("coproduct_eps_s_first_leg", contract("hab,ac->hcb", D, Es),
              contract("ab,hbm->ham", d, M), 1)
    r.compare("product_with_eps_t", contract("kj,hjm->hkm", Et, M), contract("hab,ak->hkb", D, E2), 2)
    r.compare("eps_s_product", contract("hj,jkm->hkm", Es, M), contract("kab,hb->hka", D, E2), 2)
    r.compare("eps_t_absorbs_target", contract("hj,jkm,mn->hkn", Et, M, Et),
              contract("ha,kb,abn->hkn", Et, Et, M), 2)
    r.compare("eps_s_absorbs_source", contract("kj,hjm,mn->hkn", Es, M, Es),
              contract("ha,kb,abn->hkn", Es, Es, M), 2)
    if is_commutative(wb):
        r.compare("eps_t_multiplicative", contract("hkm,mn->hkn", M, Et),
                  contract("ha,kb,abn->hkn", Et, Et, M), 2)
        r.compare("eps_s_multiplicative", contract("hkm,mn->hkn", M, Es),
                  contract("ha,kb,abn->hkn", Es, Es, M), 2)
    # the two Δ²(1) factorizations and their pointwise equivalents
    dd = _delta2_one(wb)
    outer = contract("ab,cf,cbm->amf", d, d, M) == dd
    pointwise_t = cop_t == contract("ab,ahm->hmb", d, M)
    r.flag("unit_outer_iff_eps_t_leg", outer == pointwise_t)
    inner = contract("ab,cf,bcm->amf", d, d, M) == dd
    pointwise_sp = contract("hab,bc->hac", D, Esp) == contract("ab,ham->hmb", d, M)
    r.flag("unit_inner_iff_eps_s_prime_leg", inner == pointwise_sp)
    r.compare("eps_s_prime_leg", contract("hab,bc->hac", D, Esp), contract("ab,ham->hmb", d, M), 1)
    if isinstance(h, WeakHopfAlgebra):
        r.extend(_antipode_identities(h))
    return r


def _antipode_identities(h: WeakHopfAlgebra) -> CheckReport:
    wb = h.wb
    M, D, d, Et, Es, S = wb.M, wb.D, wb.d1, wb.Et, wb.Es, h.S
    D3 = wb.D3
    r = CheckReport()

    def comp(f, g):      # f∘g as input-first tensor
        return contract("hj,jk->hk", g, f)

    r.compare("eps_t_S_is_eps_t_eps_s", comp(Et, S), comp(Et, Es), 1)
    r.compare("eps_t_eps_s_is_S_eps_s", comp(Et, Es), comp(S, Es), 1)
    r.compare("eps_s_S_is_eps_s_eps_t", comp(Es, S), comp(Es, Et), 1)
    r.compare("eps_s_eps_t_is_S_eps_t", comp(Es, Et), comp(S, Et), 1)
    r.compare("h1_S_h2_h3", contract("hacd,ce,edm->ham", D3, S, M), contract("ab,hap,bs->hps", d, M, S), 1)
    r.compare("h1_S_h2_x_h3", contract("hacd,ce,aem->hmd", D3, S, M), contract("ab,as,bhm->hsm", d, S, M), 1)
    r.compare("S_antimultiplicative", contract("hkm,ms->hks", M, S), contract("ka,hb,abs->hks", S, S, M), 2)
    r.compare("S_anticomultiplicative", contract("hs,spq->hpq", S, D), contract("hab,bp,aq->hpq", D, S, S), 1)
    return r


# ---------------------------------------------------------------------------
# antipode


def check_antipode_axioms(wb, S: Tensor) -> CheckReport:
    """The three antipode axioms for an input-first tensor S."""
    wb = as_wb(wb)
    M, D = wb.M, wb.D
    r = CheckReport()
    r.compare("antipode_h1_S_h2", contract("hab,bc,acm->hm", D, S, M), wb.Et, 1)
    r.compare("antipode_S_h1_h2", contract("hab,ac,cbm->hm", D, S, M), wb.Es, 1)
    r.compare("antipode_S_h1_h2_S_h3", contract("hacd,ap,pcm,dq,mqn->hn", wb.D3, S, M, S, M), S, 1)
    return r


def verify_antipode(wb, antipode: Mat) -> WeakHopfAlgebra:
    wb = _require(wb)
    rep = check_antipode_axioms(wb, antipode.T)
    if not rep.ok:
        raise AntipodeAxiomFailure(rep.failures()[0].line())
    return WeakHopfAlgebra(wb, antipode)


def solve_antipode(wb) -> WeakHopfAlgebra:
    """Find the antipode by linear algebra.

    Axioms h₁S(h₂) = ε_t(h) and S(h₁)h₂ = ε_s(h) are linear in S.  The third
    axiom is quadratic, but given the first it is equivalent to the linear
    condition S(h) = S(h₁)ε_t(h₂), so that is added to the system too.  The
    full quadratic axiom is re-checked on the solution.
    """
    wb = _require(wb)
    n = wb.dim
    M, D, Et, Es = wb.M, wb.D, wb.Et, wb.Es
    I = identity(n, wb.field)
    # unknown S[b, c] flattened as b*n + c; equations indexed (h, m)
    K1 = contract("hab,acm->hmbc", D, M)                   # h₁ S(h₂)
    K2 = contract("hab,cbm->hmac", D, M)                   # S(h₁) h₂
    # S(h) - S(h₁)ε_t(h₂): coefficient of S[a, c] in equation (h, m)
    K3 = contract("hab,bk,ckm->hmac", D, Et, M) - contract("ha,cm->hmac", I, I)
    A = stack_rows([K.reshape(n * n, n * n) for K in (K1, K2, K3)])
    rhs = stack_rows([Et.reshape(n * n, 1), Es.reshape(n * n, 1),
                      Tensor.zeros(wb.field, (n * n, 1))])
    sol = solve(A, rhs)
    if sol is None:
        raise NoAntipode("the linear antipode system is inconsistent")
    k = kernel_basis(A).cols
    if k:
        raise Underdetermined(f"antipode solution space has dimension {k}", k)
    S = sol.reshape(n, n)
    rep = check_antipode_axioms(wb, S)
    if not rep.ok:
        raise NoAntipode("unique linear solution fails " + rep.failures()[0].id)
    return WeakHopfAlgebra(wb, S.T)


# ---------------------------------------------------------------------------
# Hopf criterion


def hopf_criterion(h: WeakHopfAlgebra) -> tuple[bool, dict]:
    """Evaluate the five equivalent conditions for being a Hopf algebra.

    Returns (is_hopf, per-condition booleans).  Disagreement between the
    conditions means a bug and raises ConsistencyError.
    """
    from .errors import ConsistencyError
    wb = _require(h)
    M, D, u, e, S = wb.M, wb.D, wb.u, wb.e, h.S
    outer_ue = contract("h,m->hm", e, u)
    conds = {
        "unit_grouplike": wb.d1 == contract("a,b->ab", u, u),
        "counit_multiplicative": wb.E2 == contract("a,b->ab", e, e),
        "h1_S_h2_is_counit": contract("hab,bc,acm->hm", D, S, M) == outer_ue,
        "S_h1_h2_is_counit": contract("hab,ac,cbm->hm", D, S, M) == outer_ue,
        "trivial_counital_subalgebras": rank(wb.Et.T) == 1 and rank(wb.Es.T) == 1,
    }
    vals = set(conds.values())
    if len(vals) != 1:
        raise ConsistencyError(f"Hopf conditions disagree: {conds}")
    return vals.pop(), conds
