"""Command line: ``weakhopf <command> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails or
a construction is refused, and 2 for unusable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .coreops import (CheckReport, WeakHopfAlgebra, as_wb, check_antipode_axioms,
                      check_weak_bialgebra, hopf_criterion, identity_suite, is_cocommutative,
                      is_commutative, solve_antipode)
from .errors import (BadParams, DimensionMismatch, FieldMismatch, ParseError, ShapeMismatch,
                     UnknownExample, WeakHopfError)
from .integrals import integral_space, maschke_semisimple, smash_semisimple_criterion
from .linalg import rank
from .matched import (build_dual_matched_pair, check_abelian, check_compatible,
                      check_eps_t_factorization, check_weak_matched_pair)
from .scalars import Field, Q
from .serialize import dumps, load_pair, load_structure, structure_to_json
from .smash import build_antipode, build_smash, check_antipode_conditions, check_smash_bialgebra
from . import fuzz, zoo

INPUT_ERRORS = (ParseError, BadParams, UnknownExample, FieldMismatch, DimensionMismatch, ShapeMismatch)


@dataclass
class Report:
    command: list[str]
    sections: list[tuple[str, CheckReport]] = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)
    files: list[str] = dc_field(default_factory=list)
    error: str | None = None
    input_error: bool = False

    def add(self, name: str, rep: CheckReport) -> CheckReport:
        self.sections.append((name, rep))
        return rep

    @property
    def status(self) -> int:
        if self.input_error:
            return 2
        if self.error or not all(r.ok for _, r in self.sections):
            return 1
        return 0

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "checks": {name: rep.to_json() for name, rep in self.sections},
            "info": self.info,
            "files": self.files,
            "error": self.error,
            "status": self.status,
        }

    def text(self) -> str:
        out = ["command: " + " ".join(self.command)]
        for name, rep in self.sections:
            out.append(f"== {name} ==")
            out += rep.lines()
        for k, v in self.info.items():
            if k == "structure":
                continue
            out.append(f"{k}: {v if isinstance(v, str) else json.dumps(v, ensure_ascii=False)}")
        for f in self.files:
            out.append(f"wrote: {f}")
        if self.error:
            out.append(f"error: {self.error}")
        n_fail = sum(len(r.failures()) for _, r in self.sections)
        out.append(f"status: {self.status} ({n_fail} failing checks)")
        if "structure" in self.info:
            out.append(dumps(self.info["structure"]).rstrip())
        return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# recipes on the command line


def parse_recipe(text: str) -> dict:
    """``hg:C3``, ``groupoid:C2,C3``, ``kaplansky:groupoid:C2``, ``dual:hg:C3``,
    ``union:groupoid:C2+hg:C3``."""
    name, _, rest = text.partition(":")
    if name == "hg":
        return {"example": "hg", "group": rest or "C2"}
    if name == "groupoid":
        return {"example": "groupoid", "groups": rest or "C2"}
    if name in ("kaplansky", "dual"):
        if not rest:
            raise BadParams(f"{name} needs a base recipe, e.g. {name}:hg:C2")
        return {"example": name, "base": parse_recipe(rest)}
    if name == "union":
        parts = [parse_recipe(p) for p in rest.split("+") if p]
        return {"example": "union", "parts": parts}
    raise UnknownExample(f"unknown example {name!r}")


def _example_params(args) -> dict:
    if args.params:
        try:
            params = json.loads(args.params)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, "--params") from None
        if not isinstance(params, dict):
            raise ParseError("expected a JSON object", "--params")
        return params
    params = {}
    if args.group:
        params["group"] = args.group
    if args.groups:
        params["groups"] = args.groups
    if args.base:
        params["base"] = parse_recipe(args.base)
    if args.parts:
        params["parts"] = [parse_recipe(p) for p in args.parts.split("+")]
    return params


# ---------------------------------------------------------------------------
# validation helpers


def validate_structure(h, rep: Report, prefix: str = "") -> object:
    """Weak bialgebra axioms, then identities and antipode.  Returns h, with
    an antipode attached when one was solved for."""
    wb = as_wb(h)
    core = rep.add(prefix + "weak_bialgebra", check_weak_bialgebra(wb))
    if not core.ok:
        return h
    if isinstance(h, WeakHopfAlgebra):
        rep.add(prefix + "antipode", check_antipode_axioms(wb, h.S))
    else:
        try:
            h = solve_antipode(wb)
            rep.info[prefix + "antipode"] = "solved"
        except WeakHopfError as exc:
            rep.info[prefix + "antipode"] = f"none ({type(exc).__name__}: {exc})"
    rep.add(prefix + "identities", identity_suite(h))
    rep.info[prefix + "dim"] = wb.dim
    rep.info[prefix + "field"] = str(wb.field)
    rep.info[prefix + "commutative"] = is_commutative(wb)
    rep.info[prefix + "cocommutative"] = is_cocommutative(wb)
    if isinstance(h, WeakHopfAlgebra) and all(r.ok for _, r in rep.sections):
        hopf, conds = hopf_criterion(h)
        rep.info[prefix + "hopf"] = hopf
        rep.info[prefix + "hopf_conditions"] = conds
    return h


def _emit_structure(h, args, rep: Report):
    doc = structure_to_json(h)
    if args.out:
        Path(args.out).write_text(dumps(doc))
        rep.files.append(args.out)
    else:
        rep.info["structure"] = doc


def _field(args) -> Field | None:
    return Field.parse(args.field) if args.field else None


# ---------------------------------------------------------------------------
# commands


def cmd_example(args, rep: Report):
    f = _field(args) or Q
    h = zoo.build_example(args.name, _example_params(args), f)
    h = validate_structure(h, rep)
    _emit_structure(h, args, rep)


def cmd_check(args, rep: Report):
    h = load_structure(args.file, _field(args))
    validate_structure(h, rep)


def _pair_checks(mp, rep: Report):
    rep.add("matched_pair", check_weak_matched_pair(mp))
    rep.info["abelian"] = check_abelian(mp)
    if not mp.mirrored:
        rep.add("compatible", check_compatible(mp))
        if is_commutative(mp.a):
            rep.add("target_factorization", check_eps_t_factorization(mp))


def cmd_matched(args, rep: Report):
    mp = load_pair(args.file, _field(args))
    _pair_checks(mp, rep)


def cmd_smash(args, rep: Report):
    mp = load_pair(args.file, _field(args))
    sp = build_smash(mp)
    rep.info["ambient_dim"] = sp.ambient.dim
    rep.info["rank_P"] = rank(sp.ambient.P)
    rep.info["dim"] = sp.dim
    rep.info["representatives"] = [[int(x), int(h)] for x, h in sp.reps]
    rep.add("smash", check_smash_bialgebra(sp))
    out = sp.wb
    if args.antipode:
        rep.add("antipode_conditions", check_antipode_conditions(mp))
        built = CheckReport()
        try:
            out = build_antipode(sp)
            built.flag("antipode_verified", True)
            hopf, conds = hopf_criterion(out)
            rep.info["hopf"] = hopf
            rep.info["hopf_conditions"] = conds
        except WeakHopfError as exc:
            built.flag("antipode_verified", False)
            rep.info["antipode_error"] = f"{type(exc).__name__}: {exc}"
        rep.add("antipode", built)
    if args.integrals:
        _integral_info(mp.a, rep, "A.")
        _integral_info(mp.h, rep, "H.")
        _integral_info(sp.wb, rep, "smash.")
        if isinstance(mp.a, WeakHopfAlgebra) and isinstance(mp.h, WeakHopfAlgebra):
            crit, _ = smash_semisimple_criterion(sp)
            direct, _ = maschke_semisimple(sp.wb)
            rep.info["smash.criterion_semisimple"] = crit
            agree = CheckReport()
            agree.flag("semisimplicity_criterion_agrees", crit == direct)
            rep.add("integrals", agree)
    _emit_structure(out, args, rep)


def _integral_info(h, rep: Report, prefix: str):
    rep.info[prefix + "integral_dim_left"] = integral_space(h, "left").dim
    rep.info[prefix + "integral_dim_right"] = integral_space(h, "right").dim
    ss, _ = maschke_semisimple(h)
    rep.info[prefix + "semisimple"] = ss


def cmd_integrals(args, rep: Report):
    h = load_structure(args.file, _field(args))
    rep.add("weak_bialgebra", check_weak_bialgebra(as_wb(h)))
    if not rep.sections[-1][1].ok:
        return
    space = integral_space(h, args.side)
    rep.info["side"] = args.side
    rep.info["dim"] = space.dim
    rep.info["basis"] = [space.basis.column(i).reshape(h.dim).to_json() for i in range(space.dim)]
    ss, alpha = maschke_semisimple(h)
    rep.info["semisimple"] = ss
    rep.info["witness"] = alpha.to_json() if alpha is not None else None


def cmd_dual(args, rep: Report):
    if args.pair:
        mp = load_pair(args.file, _field(args))
        dp = build_dual_matched_pair(mp)
        rep.info["side"] = f"{dp.act.side} action, {dp.co.side} coaction"
        _pair_checks(dp, rep)
        back = build_dual_matched_pair(dp)
        dd = CheckReport()
        dd.compare("double_dual_action", back.T, mp.T, 1)
        dd.compare("double_dual_coaction", back.R, mp.R, 1)
        rep.add("double_dual", dd)
        return
    h = load_structure(args.file, _field(args))
    d = zoo.dual(h)
    dd = zoo.dual(d)
    r = CheckReport()
    wb, wdd = as_wb(h), as_wb(dd)
    for name in ("M", "u", "D", "e"):
        r.compare(f"double_dual_{name}", getattr(wdd, name), getattr(wb, name), 0)
    rep.add("double_dual", r)
    d = validate_structure(d, rep)
    _emit_structure(d, args, rep)


def cmd_fuzz(args, rep: Report):
    summary = fuzz.run_fuzz(args.seed, args.trials, args.candidates)
    r = CheckReport()
    for t in summary.trials:
        r.flag(f"trial_{t.index:03d}_{t.axiom}_{t.tensor}_detected", t.detected, t.entry)
    for i, c in enumerate(summary.lambda_z):
        r.flag(f"candidate_{i:03d}_{c['kind']}_agrees", c["agree"])
    rep.add("fuzz", r)
    js = summary.to_json()
    rep.info.update({k: js[k] for k in ("seed", "trials", "false_passes", "resamples",
                                         "lambda_z_candidates", "lambda_z_mismatches")})
    if args.json:
        rep.info["details"] = js["details"]
        rep.info["candidates"] = js["candidates"]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q or Fp:<p> (default for files without a field)")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--out", help="write the produced structure here")
    p = argparse.ArgumentParser(prog="weakhopf", description="Exact weak Hopf algebra computations")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("example", parents=[common], help="build and validate a zoo example")
    e.add_argument("name", help="groupoid, hg, union, kaplansky or dual")
    e.add_argument("--group", help="abelian group for hg, e.g. C2xC3")
    e.add_argument("--groups", help="groupoid components, e.g. C2,C3")
    e.add_argument("--base", help="base recipe for kaplansky/dual, e.g. hg:C2")
    e.add_argument("--parts", help="union parts joined by +, e.g. groupoid:C2+hg:C3")
    e.add_argument("--params", help="all parameters as a JSON object")
    e.set_defaults(run=cmd_example)

    c = sub.add_parser("check", parents=[common], help="validate a structure file")
    c.add_argument("file")
    c.set_defaults(run=cmd_check)

    m = sub.add_parser("matched", parents=[common], help="validate a matched pair file")
    m.add_argument("file")
    m.set_defaults(run=cmd_matched)

    s = sub.add_parser("smash", parents=[common], help="build the smash product of a pair")
    s.add_argument("file")
    s.add_argument("--antipode", action="store_true", help="also build and verify the antipode")
    s.add_argument("--integrals", action="store_true", help="append integral data")
    s.set_defaults(run=cmd_smash)

    i = sub.add_parser("integrals", parents=[common], help="integral space and semisimplicity")
    i.add_argument("file")
    i.add_argument("--side", choices=["left", "right"], default="left")
    i.set_defaults(run=cmd_integrals)

    d = sub.add_parser("dual", parents=[common], help="dual structure, or dual pair with --pair")
    d.add_argument("file")
    d.add_argument("--pair", action="store_true", help="the file is a matched pair")
    d.set_defaults(run=cmd_dual)

    f = sub.add_parser("fuzz", parents=[common], help="seeded corruption trials")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--trials", type=int, default=200)
    f.add_argument("--candidates", type=int, default=40)
    f.set_defaults(run=cmd_fuzz)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    rep = Report(["weakhopf"] + argv)
    try:
        args.run(args, rep)
    except INPUT_ERRORS as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
        rep.input_error = True
    except WeakHopfError as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
    if args.json:
        sys.stdout.write(json.dumps(rep.to_json(), indent=1, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(rep.text())
    return rep.status


if __name__ == "__main__":   # pragma: no cover
    sys.exit(main())
