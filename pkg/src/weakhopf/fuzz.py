"""Seeded corruption trials for the validators.

Each trial takes a small zoo structure, picks one axiom group at random
(algebra, coalgebra or antipode) and perturbs one entry of a tensor that
group reads.  A naive loop-based oracle, sharing no code with the
contraction-based checkers, decides whether the perturbed data still
satisfies every axiom; if it does, the trial is resampled.  The validators
must then report at least one failing check carrying a witness and a
nonzero residual.

A second family draws λ and z candidates and compares the acceptance of
``make_lambda_action``/``make_z_coaction`` with the module algebra and
comodule coalgebra checkers run on the unchecked constructions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .coreops import (CheckReport, WeakBialgebra, WeakHopfAlgebra, check_antipode_axioms,
                      check_weak_bialgebra)
from .errors import InvalidLambda, InvalidZ
from .interact import (check_comodule_coalgebra, check_module_algebra, lambda_action_unchecked,
                       make_lambda_action, make_z_coaction, z_coaction_unchecked)
from .linalg import Tensor
from .scalars import Field, Q
from . import zoo


# ---------------------------------------------------------------------------
# naive oracle on nested lists of raw values


class Naive:
    """Structure maps as dicts of nonzero entries; every axiom by explicit loops."""

    def __init__(self, field: Field, M, u, D, e, S=None):
        self.f = field
        self.n = len(u)
        self.M = self._sparse3(M)
        self.D = self._sparse3(D)
        self.u = {i: v for i, v in enumerate(u) if v != 0}
        self.e = list(e)
        self.S = None if S is None else {(i, j): v for i, row in enumerate(S)
                                          for j, v in enumerate(row) if v != 0}

    @staticmethod
    def _sparse3(t):
        out = {}
        for i, a in enumerate(t):
            for j, b in enumerate(a):
                for k, v in enumerate(b):
                    if v != 0:
                        out.setdefault((i, j), {})[k] = v
        return out

    def _red(self, v):
        return v if self.f.p is None else v % self.f.p

    def _clean(self, vec: dict) -> dict:
        out = {}
        for k, v in vec.items():
            v = self._red(v)
            if v != 0:
                out[k] = v
        return out

    # elementary operations on sparse vectors (keys: basis index tuples)
    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.M.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return self._clean(out)

    def mul2(self, x: dict, y: dict) -> dict:
        """Product in H⊗H."""
        out = {}
        for (i1, i2), a in x.items():
            for (j1, j2), b in y.items():
                for k1, c1 in self.M.get((i1, j1), {}).items():
                    for k2, c2 in self.M.get((i2, j2), {}).items():
                        out[(k1, k2)] = out.get((k1, k2), 0) + a * b * c1 * c2
        return self._clean(out)

    def delta(self, x: dict) -> dict:
        out = {}
        for i, a in x.items():
            for (h, j), row in self.D.items():
                if h != i:
                    continue
                for k, c in row.items():
                    out[(j, k)] = out.get((j, k), 0) + a * c
        return self._clean(out)

    def eps(self, x: dict):
        return self._red(sum(a * self.e[i] for i, a in x.items()))

    def antipode(self, x: dict) -> dict:
        out = {}
        for (i, j), s in self.S.items():
            if i in x:
                out[j] = out.get(j, 0) + x[i] * s
        return self._clean(out)

    def basis(self, i) -> dict:
        return {i: 1}

    def eps_t(self, x: dict) -> dict:
        out = {}
        for (a, b), c in self.delta(self.u).items():
            v = self.eps(self.mul({a: 1}, x))
            if v:
                out[b] = out.get(b, 0) + c * v
        return self._clean(out)

    def eps_s(self, x: dict) -> dict:
        out = {}
        for (a, b), c in self.delta(self.u).items():
            v = self.eps(self.mul(x, {b: 1}))
            if v:
                out[a] = out.get(a, 0) + c * v
        return self._clean(out)

    # axioms -----------------------------------------------------------------
    def violations(self) -> list[str]:
        n, B = self.n, self.basis
        bad = []
        for i in range(n):
            if self.mul(self.u, B(i)) != B(i) or self.mul(B(i), self.u) != B(i):
                bad.append("unit")
                break
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.mul(self.mul(B(i), B(j)), B(k)) != self.mul(B(i), self.mul(B(j), B(k))):
                        bad.append("associativity")
                        break
                else:
                    continue
                break
            else:
                continue
            break
        for i in range(n):
            d = self.delta(B(i))
            left, right = {}, {}
            for (a, b), c in d.items():
                for (x, y), c2 in self.delta({a: 1}).items():
                    left[(x, y, b)] = left.get((x, y, b), 0) + c * c2
                for (x, y), c2 in self.delta({b: 1}).items():
                    right[(a, x, y)] = right.get((a, x, y), 0) + c * c2
            if self._clean(left) != self._clean(right):
                bad.append("coassociativity")
                break
        for i in range(n):
            d = self.delta(B(i))
            l, r = {}, {}
            for (a, b), c in d.items():
                l[b] = l.get(b, 0) + c * self.e[a]
                r[a] = r.get(a, 0) + c * self.e[b]
            if self._clean(l) != B(i) or self._clean(r) != B(i):
                bad.append("counit")
                break
        for i in range(n):
            for j in range(n):
                if self.delta(self.mul(B(i), B(j))) != self.mul2(self.delta(B(i)), self.delta(B(j))):
                    bad.append("delta_multiplicative")
                    break
            else:
                continue
            break
        bad += self._weak_counit() + self._weak_unit()
        if self.S is not None:
            bad += self._antipode()
        return bad

    def _weak_counit(self) -> list[str]:
        n, B = self.n, self.basis
        for a in range(n):
            for b in range(n):
                ab = self.mul(B(a), B(b))
                d = self.delta(B(b))
                for c in range(n):
                    lhs = self.eps(self.mul(ab, B(c)))
                    r1 = sum(v * self.eps(self.mul(B(a), {x: 1})) * self.eps(self.mul({y: 1}, B(c)))
                             for (x, y), v in d.items())
                    r2 = sum(v * self.eps(self.mul(B(a), {y: 1})) * self.eps(self.mul({x: 1}, B(c)))
                             for (x, y), v in d.items())
                    if self._red(lhs - r1) or self._red(lhs - r2):
                        return ["weak_counit"]
        return []

    def _weak_unit(self) -> list[str]:
        d1 = self.delta(self.u)
        dd = {}
        for (a, b), c in d1.items():
            for (x, y), c2 in self.delta({a: 1}).items():
                dd[(x, y, b)] = dd.get((x, y, b), 0) + c * c2
        dd = self._clean(dd)

        def mul3(p, q):
            out = {}
            for (i1, i2, i3), a in p.items():
                for (j1, j2, j3), b in q.items():
                    for k1, c1 in self.M.get((i1, j1), {}).items():
                        for k2, c2 in self.M.get((i2, j2), {}).items():
                            for k3, c3 in self.M.get((i3, j3), {}).items():
                                key = (k1, k2, k3)
                                out[key] = out.get(key, 0) + a * b * c1 * c2 * c3
            return self._clean(out)

        left = {(a, b, k): c * w for (a, b), c in d1.items() for k, w in self.u.items()}
        right = {(k, a, b): c * w for (a, b), c in d1.items() for k, w in self.u.items()}
        left, right = self._clean(left), self._clean(right)
        if mul3(left, right) != dd or mul3(right, left) != dd:
            return ["weak_unit"]
        return []

    def _antipode(self) -> list[str]:
        n, B = self.n, self.basis
        for i in range(n):
            d = self.delta(B(i))
            l, r = {}, {}
            for (a, b), c in d.items():
                for k, v in self.mul({a: 1}, self.antipode({b: 1})).items():
                    l[k] = l.get(k, 0) + c * v
                for k, v in self.mul(self.antipode({a: 1}), {b: 1}).items():
                    r[k] = r.get(k, 0) + c * v
            if self._clean(l) != self.eps_t(B(i)):
                return ["antipode_target"]
            if self._clean(r) != self.eps_s(B(i)):
                return ["antipode_source"]
            three = {}
            for (a, b), c in d.items():
                for (x, y), c2 in self.delta({b: 1}).items():
                    p = self.mul(self.mul(self.antipode({a: 1}), {x: 1}), self.antipode({y: 1}))
                    for k, v in p.items():
                        three[k] = three.get(k, 0) + c * c2 * v
            if self._clean(three) != self.antipode(B(i)):
                return ["antipode_sandwich"]
        return []


def naive_from(h) -> Naive:
    wb = h.wb if isinstance(h, WeakHopfAlgebra) else h
    S = h.S.tolist() if isinstance(h, WeakHopfAlgebra) else None
    return Naive(wb.field, wb.M.tolist(), wb.u.tolist(), wb.D.tolist(), wb.e.tolist(), S)


# ---------------------------------------------------------------------------
# corruption trials


HOSTS = [
    ("groupoid", {"groups": "C2"}, Q),
    ("groupoid", {"groups": "C2,C1"}, Q),
    ("groupoid", {"groups": "C3"}, Field(5)),
    ("hg", {"group": "C2"}, Q),
    ("hg", {"group": "C3"}, Q),
    ("kaplansky", {"base": {"example": "groupoid", "groups": "C2"}}, Q),
    ("dual", {"base": {"example": "hg", "group": "C3"}}, Q),
    ("dual", {"base": {"example": "groupoid", "groups": "C1,C2"}}, Field(7)),
]

# which tensors each axiom group reads
SUPPORT = {
    "algebra": ("M", "u"),
    "coalgebra": ("D", "e"),
    "antipode": ("S",),
}

DELTAS = [1, -1, 2, Fraction(1, 2), 3]


@dataclass
class Trial:
    index: int
    host: str
    axiom: str
    tensor: str
    entry: tuple
    delta: str
    resamples: int
    oracle: list[str]
    report: CheckReport

    @property
    def detected(self) -> bool:
        return any(i.witness is not None and i.residual and any(s != 0 for s in i.residual)
                   for i in self.report.failures())

    def to_json(self) -> dict:
        first = self.report.failures()[0] if self.report.failures() else None
        return {"trial": self.index, "host": self.host, "axiom": self.axiom,
                "tensor": self.tensor, "entry": list(self.entry), "delta": self.delta,
                "resamples": self.resamples, "oracle": self.oracle,
                "detected": self.detected, "first_failure": first.to_json() if first else None}


@dataclass
class FuzzSummary:
    seed: int
    trials: list[Trial] = dc_field(default_factory=list)
    lambda_z: list[dict] = dc_field(default_factory=list)

    @property
    def false_passes(self) -> int:
        return sum(not t.detected for t in self.trials)

    @property
    def mismatches(self) -> int:
        return sum(not c["agree"] for c in self.lambda_z)

    @property
    def ok(self) -> bool:
        return self.false_passes == 0 and self.mismatches == 0

    def to_json(self) -> dict:
        return {"seed": self.seed, "trials": len(self.trials), "false_passes": self.false_passes,
                "resamples": sum(t.resamples for t in self.trials),
                "lambda_z_candidates": len(self.lambda_z), "lambda_z_mismatches": self.mismatches,
                "details": [t.to_json() for t in self.trials], "candidates": self.lambda_z}


def _host(i):
    name, params, f = HOSTS[i]
    return f"{name}:{params}@{f}", zoo.build_example(name, params, f)


def _tensors(h) -> dict[str, list]:
    wb = h.wb
    return {"M": wb.M.tolist(), "u": wb.u.tolist(), "D": wb.D.tolist(), "e": wb.e.tolist(),
            "S": h.S.tolist()}


def _poke(nested, idx, delta):
    t = nested
    for k in idx[:-1]:
        t = t[k]
    t[idx[-1]] = t[idx[-1]] + delta


def _rebuild(f: Field, t: dict) -> WeakHopfAlgebra:
    mk = lambda v: Tensor.from_values(f, v)
    wb = WeakBialgebra.from_tensors(mk(t["M"]), mk(t["u"]), mk(t["D"]), mk(t["e"]))
    return WeakHopfAlgebra(wb, mk(t["S"]).T)


def corrupt_once(rng: random.Random, index: int, max_resample: int = 50) -> Trial:
    for attempt in range(max_resample):
        hi = rng.randrange(len(HOSTS))
        label, h = _host(hi)
        f = h.field
        axiom = rng.choice(sorted(SUPPORT))
        name = rng.choice(SUPPORT[axiom])
        t = _tensors(h)
        shape = {"M": (h.dim,) * 3, "D": (h.dim,) * 3, "u": (h.dim,), "e": (h.dim,),
                 "S": (h.dim, h.dim)}[name]
        idx = tuple(rng.randrange(s) for s in shape)
        delta = f.raw(rng.choice(DELTAS))
        if f.p is not None and delta % f.p == 0:
            continue
        _poke(t[name], idx, delta)
        if f.p is not None:
            t = {k: _reduce(v, f.p) for k, v in t.items()}
        oracle = Naive(f, t["M"], t["u"], t["D"], t["e"], t["S"]).violations()
        if not oracle:
            continue                    # the perturbation kept every axiom: resample
        bad = _rebuild(f, t)
        report = check_weak_bialgebra(bad.wb)
        report.extend(check_antipode_axioms(bad.wb, bad.S))
        return Trial(index, label, axiom, name, idx, str(f(delta)), attempt, oracle, report)
    raise RuntimeError("no axiom-breaking perturbation found")   # pragma: no cover


def _reduce(v, p):
    if isinstance(v, list):
        return [_reduce(x, p) for x in v]
    return v % p


# ---------------------------------------------------------------------------
# λ / z candidates


LZ_HOSTS = [("groupoid", {"groups": "C2,C3"}), ("groupoid", {"groups": "C2,C1"}),
            ("groupoid", {"groups": "C2"}), ("hg", {"group": "C2"})]


def lambda_z_candidates(rng: random.Random, count: int) -> list[dict]:
    out = []
    for c in range(count):
        name, params = LZ_HOSTS[rng.randrange(len(LZ_HOSTS))]
        h = zoo.build_example(name, params, Q)
        n = h.dim
        # mostly 0/1 vectors so valid candidates show up, sometimes other values
        vec = [rng.choice([0, 0, 1]) if rng.random() < 0.85 else rng.choice([-1, 2, Fraction(1, 2)])
               for _ in range(n)]
        if rng.random() < 0.5:
            try:
                make_lambda_action(h, h, vec)
                accepted = True
            except InvalidLambda:
                accepted = False
            checked = check_module_algebra(lambda_action_unchecked(h, h, vec)).ok
            kind = "lambda"
        else:
            try:
                make_z_coaction(h, h, vec)
                accepted = True
            except InvalidZ:
                accepted = False
            checked = check_comodule_coalgebra(z_coaction_unchecked(h, h, vec)).ok
            kind = "z"
        out.append({"kind": kind, "host": f"{name}:{params}", "vector": [str(Fraction(v)) for v in vec],
                    "accepted": accepted, "checker_pass": checked, "agree": accepted == checked})
    return out


def run_fuzz(seed: int = 0, trials: int = 200, candidates: int = 40) -> FuzzSummary:
    rng = random.Random(seed)
    summary = FuzzSummary(seed)
    for i in range(trials):
        summary.trials.append(corrupt_once(rng, i))
    summary.lambda_z = lambda_z_candidates(rng, candidates)
    return summary
