"""JSON files for structures and matched pairs.

Structure file::

    {"field": "Q" | {"Fp": p}, "dim": n,
     "mult": c[i][j][k], "unit": [..], "comult": d[i][j][k], "counit": [..],
     "antipode": s[i][j] (optional), "labels": [..] (optional)}

with e_i e_j = Σ c[i][j][k] e_k, Δ(e_i) = Σ d[i][j][k] e_j⊗e_k and
S(e_i) = Σ s[i][j] e_j.  Scalars are ints or "a/b" strings (residues over F_p).

Anywhere a structure is expected a zoo recipe may stand instead, e.g.
``{"example": "hg", "group": "C2"}``.

Pair file::

    {"field": ..., "H": <structure>, "A": <structure>,
     "action": t[h][a][b] | {"lambda": [..]} | "regular" | "trivial",
     "coaction": r[h][p][x] | {"z": [..]} | "regular" | "trivial"}

with h·e_a = Σ t[h][a][b] e_b and ρ(e_h) = Σ r[h][p][x] e_p⊗f_x.  A pair file
may instead read ``{"kaplansky": <pair>}`` for the extension of a Hopf pair.
"""
from __future__ import annotations

import json
from pathlib import Path

from .coreops import WeakBialgebra, WeakHopfAlgebra, as_wb
from .errors import ParseError, WeakHopfError
from .interact import (ActionData, CoactionData, make_lambda_action, make_z_coaction,
                       regular_action, regular_coaction, trivial_action, trivial_coaction)
from .linalg import Tensor
from .matched import MatchedPairData, kaplansky_pair
from .scalars import Field
from . import zoo


# ---------------------------------------------------------------------------
# writing


def structure_to_json(h) -> dict:
    wb = as_wb(h)
    out = {
        "field": wb.field.to_json(),
        "dim": wb.dim,
        "mult": wb.M.to_json(),
        "unit": wb.u.to_json(),
        "comult": wb.D.to_json(),
        "counit": wb.e.to_json(),
    }
    if isinstance(h, WeakHopfAlgebra):
        out["antipode"] = h.S.to_json()
    if wb.labels:
        out["labels"] = list(wb.labels)
    return out


def pair_to_json(mp: MatchedPairData) -> dict:
    if mp.act.side != "left" or mp.co.side != "right":
        raise ValueError("only left action / right coaction pairs are written")
    return {
        "field": mp.h.field.to_json(),
        "H": structure_to_json(mp.h),
        "A": structure_to_json(mp.a),
        "action": mp.T.to_json(),
        "coaction": mp.R.to_json(),
    }


def dumps(obj) -> str:
    """Stable text form: sorted keys never reorder arrays, so output is deterministic."""
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# reading


def _shape_of(value, path: str, shape: tuple[int, ...]):
    """Raise ParseError unless ``value`` is a nested list of the given shape."""
    if not shape:
        if isinstance(value, (list, dict)) or value is None:
            raise ParseError("expected a scalar", path)
        return
    if not isinstance(value, list) or len(value) != shape[0]:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise ParseError(f"expected a list of length {shape[0]}, got {got}", path)
    for i, v in enumerate(value):
        _shape_of(v, f"{path}[{i}]", shape[1:])


def _tensor(field: Field, value, path: str, shape) -> Tensor:
    _shape_of(value, path, tuple(shape))
    try:
        return Tensor.from_values(field, value, tuple(shape))
    except WeakHopfError as exc:
        # locate the offending entry for the message
        flat = list(_flatten(value, path))
        for p, v in flat:
            try:
                field.raw(v)
            except WeakHopfError:
                raise ParseError(f"bad scalar {v!r}: {exc}", p) from None
        raise ParseError(str(exc), path) from None


def _flatten(value, path):
    if isinstance(value, list):
        for i, v in enumerate(value):
            yield from _flatten(v, f"{path}[{i}]")
    else:
        yield path, value


def _field_of(obj: dict, default: Field | None, path: str) -> Field:
    if "field" in obj:
        try:
            return Field.from_json(obj["field"])
        except ParseError as exc:
            raise ParseError(str(exc), f"{path}.field" if path else "field") from None
    if default is None:
        raise ParseError("missing field", f"{path}.field" if path else "field")
    return default


def structure_from_json(obj, field: Field | None = None, path: str = "", base: Path | None = None):
    """Parse a structure (or a zoo recipe); returns a WeakHopfAlgebra when an antipode is given."""
    if isinstance(obj, str):
        return load_structure(_resolve(obj, base), field)
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path or "$")
    f = _field_of(obj, field, path)
    if "example" in obj:
        try:
            return zoo.build_example(obj["example"], obj, f)
        except WeakHopfError as exc:
            raise ParseError(f"{type(exc).__name__}: {exc}", f"{path}.example" if path else "example") from None
    p = (path + ".") if path else ""
    for key in ("dim", "mult", "unit", "comult", "counit"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", p + key)
    n = obj["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("dim must be a positive integer", p + "dim")
    M = _tensor(f, obj["mult"], p + "mult", (n, n, n))
    u = _tensor(f, obj["unit"], p + "unit", (n,))
    D = _tensor(f, obj["comult"], p + "comult", (n, n, n))
    e = _tensor(f, obj["counit"], p + "counit", (n,))
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise ParseError(f"labels must be {n} strings", p + "labels")
    wb = WeakBialgebra.from_tensors(M, u, D, e, labels)
    if "antipode" in obj:
        S = _tensor(f, obj["antipode"], p + "antipode", (n, n))
        return WeakHopfAlgebra(wb, S.T)
    return wb


def _resolve(name: str, base: Path | None) -> Path:
    p = Path(name)
    if not p.is_absolute() and base is not None:
        p = base / p
    return p


def _read_json(path: Path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})",
                         f"{path}:{exc.lineno}") from None


def load_structure(path, field: Field | None = None):
    path = Path(path)
    return structure_from_json(_read_json(path), field, "", path.parent)


def pair_from_json(obj, field: Field | None = None, path: str = "", base: Path | None = None) -> MatchedPairData:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path or "$")
    p = (path + ".") if path else ""
    f = _field_of(obj, field, path) if ("field" in obj or field is not None) else None
    if "kaplansky" in obj:
        inner = pair_from_json(obj["kaplansky"], f, p + "kaplansky", base)
        try:
            return kaplansky_pair(inner)
        except WeakHopfError as exc:
            raise ParseError(f"{type(exc).__name__}: {exc}", p + "kaplansky") from None
    if f is None:
        raise ParseError("missing field", p + "field")
    for key in ("H", "A", "action", "coaction"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", p + key)
    H = structure_from_json(obj["H"], f, p + "H", base)
    A = H if obj["A"] == obj["H"] else structure_from_json(obj["A"], f, p + "A", base)
    act = _action(obj["action"], H, A, f, p + "action")
    co = _coaction(obj["coaction"], H, A, f, p + "coaction")
    try:
        return MatchedPairData(H, A, act, co)
    except WeakHopfError as exc:
        raise ParseError(str(exc), path or "$") from None


def _action(spec, H, A, f, path) -> ActionData:
    if spec == "regular":
        if as_wb(H) != as_wb(A):
            raise ParseError("regular action needs A = H", path)
        return regular_action(H)
    if spec == "trivial":
        return trivial_action(H, A)
    if isinstance(spec, dict):
        if set(spec) != {"lambda"}:
            raise ParseError("expected {\"lambda\": [...]}", path)
        lam = _tensor(f, spec["lambda"], path + ".lambda", (H.dim,))
        try:
            return make_lambda_action(H, A, lam)
        except WeakHopfError as exc:
            raise ParseError(f"{type(exc).__name__}: {exc}", path + ".lambda") from None
    T = _tensor(f, spec, path, (H.dim, A.dim, A.dim))
    return ActionData.from_tensor(H, A, T)


def _coaction(spec, H, A, f, path) -> CoactionData:
    if spec == "regular":
        if as_wb(H) != as_wb(A):
            raise ParseError("regular coaction needs A = H", path)
        return regular_coaction(H)
    if spec == "trivial":
        return trivial_coaction(H, A)
    if isinstance(spec, dict):
        if set(spec) != {"z"}:
            raise ParseError("expected {\"z\": [...]}", path)
        z = _tensor(f, spec["z"], path + ".z", (A.dim,))
        try:
            return make_z_coaction(H, A, z)
        except WeakHopfError as exc:
            raise ParseError(f"{type(exc).__name__}: {exc}", path + ".z") from None
    R = _tensor(f, spec, path, (H.dim, H.dim, A.dim))
    return CoactionData.from_tensor(H, A, R)


def load_pair(path, field: Field | None = None) -> MatchedPairData:
    path = Path(path)
    return pair_from_json(_read_json(path), field, "", path.parent)
