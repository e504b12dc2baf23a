"""Shared builders and brute-force oracles for the tests."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from weakhopf import zoo
from weakhopf.coreops import WeakBialgebra, WeakHopfAlgebra, as_wb
from weakhopf.fuzz import naive_from
from weakhopf.linalg import Tensor
from weakhopf.matched import kaplansky_pair, pair_lambda_z, pair_regular, pair_trivial
from weakhopf.scalars import Field, Q
from weakhopf.smash import build_smash

F3, F5, F7 = Field(3), Field(5), Field(7)


def naive_ok(h) -> bool:
    """Loop-based check of every axiom, independent of the contraction code."""
    return not naive_from(h).violations()


def pair_groupoid_algebra(field: Field, objects: int = 2) -> WeakHopfAlgebra:
    """k𝒢 for the pair groupoid on ``objects`` objects: arrows (i, j), with
    (i, j)(j, l) = (i, l), Δ(g) = g⊗g, ε = 1, S(i, j) = (j, i).  As an algebra
    this is the full matrix algebra."""
    arrows = [(i, j) for i in range(objects) for j in range(objects)]
    idx = {a: n for n, a in enumerate(arrows)}
    n = len(arrows)
    M = [[[0] * n for _ in range(n)] for _ in range(n)]
    D = [[[0] * n for _ in range(n)] for _ in range(n)]
    S = [[0] * n for _ in range(n)]
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                M[a][b][idx[(i, l)]] = 1
        D[a][a][a] = 1
        S[a][idx[(j, i)]] = 1
    u = [1 if i == j else 0 for i, j in arrows]
    e = [1] * n
    mk = lambda v: Tensor.from_values(field, v)
    wb = WeakBialgebra.from_tensors(mk(M), mk(u), mk(D), mk(e), [f"{i}{j}" for i, j in arrows])
    return WeakHopfAlgebra(wb, mk(S).T)


def all_vectors(field: Field, n: int):
    for v in product(range(field.p), repeat=n):
        yield list(v)


@lru_cache(maxsize=None)
def pair(name: str):
    if name == "hg_c2":
        return pair_regular(zoo.hg("C2", Q))
    if name == "hg_c2xc2":
        return pair_regular(zoo.hg("C2xC2", Q))
    if name == "hg_c3_f7":
        return pair_regular(zoo.hg("C3", F7))
    if name == "lambda_z":
        h = zoo.groupoid_algebra("C2,C3", Q)
        return pair_lambda_z(h, h, [1, 1, 0, 0, 0], [0, 0, 1, 0, 0])
    if name == "lambda_z_f3":
        # λ = ε on the C3 component, z = unit of the C2 component, over F3
        h = zoo.groupoid_algebra("C2,C3", F3)
        return pair_lambda_z(h, h, [0, 0, 1, 1, 1], [1, 0, 0, 0, 0])
    if name == "kaplansky":
        base = zoo.groupoid_algebra("C2", Q)
        return kaplansky_pair(pair_trivial(base, base))
    raise KeyError(name)


@lru_cache(maxsize=None)
def smash(name: str):
    return build_smash(pair(name))


PAIRS = ["hg_c2", "hg_c2xc2", "hg_c3_f7", "lambda_z", "lambda_z_f3", "kaplansky"]
HOPF_PAIRS = ["lambda_z", "kaplansky"]


GROUPS = ["C1", "C2", "C3", "C4", "C2xC2"]
GROUPOIDS = ["C1", "C2", "C3", "C2,C3", "C1,C2,C3", "C4,C2xC2", "C2,C3,C3", "S3"]


def zoo_instances():
    """(label, structure) for every zoo family the library builds."""
    out = []
    for g in GROUPS:
        out.append((f"hg {g}/Q", lambda g=g: zoo.hg(g, Q)))
    out.append(("hg C4/F5", lambda: zoo.hg("C4", F5)))
    out.append(("hg C3/F7", lambda: zoo.hg("C3", F7)))
    for s in GROUPOIDS:
        out.append((f"groupoid {s}/Q", lambda s=s: zoo.groupoid_algebra(s, Q)))
    out.append(("groupoid C2,C3/F5", lambda: zoo.groupoid_algebra("C2,C3", F5)))
    out.append(("union hgC2+kC3", lambda: zoo.disjoint_union(zoo.hg("C2", Q), zoo.groupoid_algebra("C3", Q))))
    out.append(("union hgC2+hgC2", lambda: zoo.disjoint_union(zoo.hg("C2", Q), zoo.hg("C2", Q))))
    out.append(("kaplansky kC2", lambda: zoo.kaplansky(zoo.groupoid_algebra("C2", Q))))
    out.append(("kaplansky kC3/F7", lambda: zoo.kaplansky(zoo.groupoid_algebra("C3", F7))))
    out.append(("dual hg C3", lambda: zoo.dual(zoo.hg("C3", Q))))
    out.append(("dual groupoid C2,C3", lambda: zoo.dual(zoo.groupoid_algebra("C2,C3", Q))))
    out.append(("dual groupoid S3", lambda: zoo.dual(zoo.groupoid_algebra("S3", Q))))
    out.append(("pair groupoid", lambda: pair_groupoid_algebra(Q)))
    return out
