"""Concrete weak Hopf algebras: groupoid algebras, ℋ^G, disjoint unions,
the Kaplansky extension H′ and duals.

Groups are small multiplication tables.  A group spec string is a product of
factors separated by ``x``: ``C1``, ``C4``, ``C2xC2``, ``C2xC3`` or ``S3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
import math
import re

import numpy as np

from .coreops import WeakBialgebra, WeakHopfAlgebra, as_wb, hopf_criterion
from .errors import BadCharacteristic, BadParams, NotAbelian, NotHopf, NotSubgroup, UnknownExample
from .linalg import Tensor
from .scalars import Field


@dataclass(frozen=True)
class FiniteGroupTable:
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]   # table[a][b] = index of ab
    identity: int = 0
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        assert len(self.table) == n and all(len(r) == n for r in self.table)

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))


def cyclic_product(ns: list[int]) -> FiniteGroupTable:
    if not ns or any(n < 1 for n in ns):
        raise BadParams(f"bad cyclic orders {ns}")
    elems = list(product(*[range(n) for n in ns]))
    index = {g: i for i, g in enumerate(elems)}
    table = tuple(tuple(index[tuple((a + b) % n for a, b, n in zip(g, h, ns))] for h in elems)
                  for g in elems)
    if len(ns) == 1:
        labels = tuple("1" if g[0] == 0 else ("g" if g[0] == 1 else f"g^{g[0]}") for g in elems)
    else:
        labels = tuple("(" + ",".join(map(str, g)) + ")" for g in elems)
    return FiniteGroupTable(labels, table, 0, "x".join(f"C{n}" for n in ns))


def symmetric3() -> FiniteGroupTable:
    elems = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(index[tuple(s[t[x]] for x in range(3))] for t in elems) for s in elems)
    return FiniteGroupTable(tuple("".join(map(str, p)) for p in elems), table, 0, "S3")


def direct_product(g: FiniteGroupTable, h: FiniteGroupTable) -> FiniteGroupTable:
    pairs = [(a, b) for a in range(g.order) for b in range(h.order)]
    index = {p: i for i, p in enumerate(pairs)}
    table = tuple(tuple(index[(g.mul(a, c), h.mul(b, d))] for (c, d) in pairs) for (a, b) in pairs)
    labels = tuple(f"({g.labels[a]},{h.labels[b]})" for a, b in pairs)
    return FiniteGroupTable(labels, table, index[(g.identity, h.identity)], f"{g.name}x{h.name}")


def parse_group(spec: str) -> FiniteGroupTable:
    """``C2xC3``-style spec; ``S3`` may appear as a factor."""
    factors = [f.strip() for f in spec.strip().split("x")]
    if not factors or any(not f for f in factors):
        raise BadParams(f"bad group spec {spec!r}")
    out = None
    ns: list[int] = []
    for f in factors:
        m = re.fullmatch(r"C(\d+)", f)
        if m:
            ns.append(int(m.group(1)))
            continue
        if f != "S3":
            raise BadParams(f"unknown group factor {f!r}")
        if ns:
            out = cyclic_product(ns) if out is None else direct_product(out, cyclic_product(ns))
            ns = []
        out = symmetric3() if out is None else direct_product(out, symmetric3())
    if ns:
        out = cyclic_product(ns) if out is None else direct_product(out, cyclic_product(ns))
    return FiniteGroupTable(out.labels, out.table, out.identity, spec.strip())


def group_quotient(g: FiniteGroupTable, n: list[int]) -> FiniteGroupTable:
    """G/N for a normal subgroup N given by element indices."""
    ns = set(n)
    if g.identity not in ns or any(g.mul(a, b) not in ns for a in ns for b in ns):
        raise NotSubgroup("not closed under multiplication")
    if any(g.mul(g.mul(x, a), g.inv(x)) not in ns for x in range(g.order) for a in ns):
        raise NotSubgroup("subgroup is not normal")
    cosets: list[frozenset] = []
    for x in range(g.order):
        c = frozenset(g.mul(x, a) for a in ns)
        if c not in cosets:
            cosets.append(c)
    of = {x: i for i, c in enumerate(cosets) for x in c}
    table = tuple(tuple(of[g.mul(min(a), min(b))] for b in cosets) for a in cosets)
    labels = tuple("[" + g.labels[min(c)] + "]" for c in cosets)
    return FiniteGroupTable(labels, table, of[g.identity], f"{g.name}/N")


@dataclass(frozen=True)
class GroupoidSpec:
    """A groupoid that is a disjoint union of groups (one per object)."""
    components: tuple[FiniteGroupTable, ...]

    @classmethod
    def parse(cls, spec: str) -> "GroupoidSpec":
        return cls(tuple(parse_group(s) for s in spec.split(",")))

    @property
    def size(self) -> int:
        return sum(g.order for g in self.components)

    def offsets(self) -> list[int]:
        out, k = [], 0
        for g in self.components:
            out.append(k)
            k += g.order
        return out


# ---------------------------------------------------------------------------
# builders


def _zeros(shape):
    return np.zeros(shape, dtype=object)


def _t(field, num, den=1):
    return Tensor.make(field, num, den)


def groupoid_algebra(spec: GroupoidSpec | str, field: Field) -> WeakHopfAlgebra:
    """k𝒢: δ_gδ_h = δ_gh inside one component, Δ(δ_g) = δ_g⊗δ_g, ε = 1, S(δ_g) = δ_{g⁻¹}."""
    if isinstance(spec, str):
        spec = GroupoidSpec.parse(spec)
    n = spec.size
    M, u, D, e, S = _zeros((n, n, n)), _zeros(n), _zeros((n, n, n)), _zeros(n), _zeros((n, n))
    labels = []
    for c, (g, off) in enumerate(zip(spec.components, spec.offsets())):
        for a in range(g.order):
            for b in range(g.order):
                M[off + a, off + b, off + g.mul(a, b)] = 1
            D[off + a, off + a, off + a] = 1
            e[off + a] = 1
            S[off + a, off + g.inv(a)] = 1
            labels.append(g.labels[a] if len(spec.components) == 1 else f"{g.labels[a]}@{c}")
        u[off + g.identity] = 1
    wb = WeakBialgebra.from_tensors(_t(field, M), _t(field, u), _t(field, D), _t(field, e), labels)
    return WeakHopfAlgebra(wb, _t(field, S).T)


def hg(g: FiniteGroupTable | str, field: Field) -> WeakHopfAlgebra:
    """ℋ^G: group algebra of an abelian G with Δ(g) = |G|⁻¹ Σ_h gh⊗h⁻¹,
    ε(g) = |G|δ_{g,1} and S = id."""
    if isinstance(g, str):
        g = parse_group(g)
    if not g.is_abelian():
        raise NotAbelian(f"{g.name} is not abelian")
    n = g.order
    if field.p is not None and n % field.p == 0:
        raise BadCharacteristic(f"char {field.p} divides |G| = {n}")
    M, u, D, e, S = _zeros((n, n, n)), _zeros(n), _zeros((n, n, n)), _zeros(n), _zeros((n, n))
    for a in range(n):
        for b in range(n):
            M[a, b, g.mul(a, b)] = 1
            D[a, g.mul(a, b), g.inv(b)] += 1
        S[a, a] = 1
    u[g.identity] = 1
    e[g.identity] = n
    wb = WeakBialgebra.from_tensors(_t(field, M), _t(field, u), _t(field, D, n), _t(field, e),
                                    g.labels)
    return WeakHopfAlgebra(wb, _t(field, S).T)


def _block(a: Tensor, b: Tensor) -> Tensor:
    den = math.lcm(a.den, b.den)
    out = _zeros(tuple(x + y for x, y in zip(a.shape, b.shape)))
    out[tuple(slice(0, x) for x in a.shape)] = a.num * (den // a.den)
    out[tuple(slice(x, None) for x in a.shape)] = b.num * (den // b.den)
    return Tensor.make(a.field, out, den)


def _concat(a: Tensor, b: Tensor) -> Tensor:
    den = math.lcm(a.den, b.den)
    return Tensor.make(a.field, np.concatenate([a.num * (den // a.den), b.num * (den // b.den)]), den)


def disjoint_union(h1, h2):
    """H₁ ⊕ H₂ with block-diagonal structure maps; keeps an antipode if both have one."""
    w1, w2 = as_wb(h1), as_wb(h2)
    if w1.field != w2.field:
        from .errors import FieldMismatch
        raise FieldMismatch(f"{w1.field} vs {w2.field}")
    labels = None
    if w1.labels and w2.labels:
        labels = [f"{s}|0" for s in w1.labels] + [f"{s}|1" for s in w2.labels]
    wb = WeakBialgebra.from_tensors(_block(w1.M, w2.M), _concat(w1.u, w2.u),
                                    _block(w1.D, w2.D), _concat(w1.e, w2.e), labels)
    if isinstance(h1, WeakHopfAlgebra) and isinstance(h2, WeakHopfAlgebra):
        return WeakHopfAlgebra(wb, _block(h1.S, h2.S).T)
    return wb


def kaplansky(h: WeakHopfAlgebra) -> WeakHopfAlgebra:
    """H′ = H ⊕ k𝟙 with a new unit 𝟙; the old unit 𝕖 stays an idempotent.

    Δ(𝟙) = (𝟙−𝕖)⊗(𝟙−𝕖) + 𝕖⊗𝕖, ε(𝟙) = 2, S(𝟙) = 𝟙.  Basis: old basis then 𝟙.
    """
    is_hopf, _ = hopf_criterion(h)
    if not is_hopf:
        raise NotHopf("the Kaplansky extension needs a Hopf algebra")
    wb, f = h.wb, h.field
    n = wb.dim
    N = n + 1
    zero, one = f.zero, f.one

    def widen(t: Tensor) -> np.ndarray:
        out = np.full(tuple(N for _ in t.shape), zero, dtype=object)
        flat = np.empty(t.size, dtype=object)
        flat[:] = [f(v) for v in t.raw_values()]
        out[tuple(slice(0, n) for _ in t.shape)] = flat.reshape(t.shape)
        return out

    M = widen(wb.M)
    for j in range(N):
        M[n, j, j] = one
        M[j, n, j] = one
    u = np.full(N, zero, dtype=object)
    u[n] = one
    D = widen(wb.D)
    old_unit = list(widen(wb.u))
    one_minus_e = [-x for x in old_unit]
    one_minus_e[n] = one
    for j in range(N):
        for k in range(N):
            D[n, j, k] = one_minus_e[j] * one_minus_e[k] + old_unit[j] * old_unit[k]
    e = widen(wb.e)
    e[n] = f(2)
    S = widen(h.S)
    S[n, n] = one
    labels = list(wb.labels) + ["𝟙"] if wb.labels else None
    mk = lambda arr: Tensor.from_values(f, arr)
    wb2 = WeakBialgebra.from_tensors(mk(M), mk(u), mk(D), mk(e), labels)
    return WeakHopfAlgebra(wb2, mk(S).T)


def dual(h):
    """The linear dual in the dual basis: multiplication and comultiplication swap roles."""
    wb = as_wb(h)
    labels = [f"{s}*" for s in wb.labels] if wb.labels else None
    d = WeakBialgebra.from_tensors(wb.D.transpose(1, 2, 0), wb.e, wb.M.transpose(2, 0, 1), wb.u,
                                   labels)
    if isinstance(h, WeakHopfAlgebra):
        return WeakHopfAlgebra(d, h.S)      # S* is the transpose of S
    return d


def trivial(field: Field) -> WeakHopfAlgebra:
    """The base field k as a one-dimensional Hopf algebra."""
    return groupoid_algebra("C1", field)


# ---------------------------------------------------------------------------
# named examples for the command line


def build_example(name: str, params: dict, field: Field):
    """Build a zoo entry by name: groupoid, hg, union, kaplansky, dual."""
    try:
        if name == "groupoid":
            return groupoid_algebra(params.get("groups", "C2"), field)
        if name == "hg":
            return hg(params.get("group", "C2"), field)
        if name == "union":
            parts = params.get("parts")
            if not parts or len(parts) < 2:
                raise BadParams("union needs at least two parts")
            out = build_example(parts[0]["example"], parts[0], field)
            for p in parts[1:]:
                out = disjoint_union(out, build_example(p["example"], p, field))
            return out
        if name == "kaplansky":
            base = params.get("base", {"example": "groupoid", "groups": "C2"})
            return kaplansky(build_example(base["example"], base, field))
        if name == "dual":
            base = params.get("base", {"example": "hg", "group": "C2"})
            return dual(build_example(base["example"], base, field))
    except KeyError as exc:
        raise BadParams(f"missing parameter {exc}") from None
    raise UnknownExample(f"unknown example {name!r}")
