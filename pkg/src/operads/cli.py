"""Command line front end.

Subcommands:

    perm block <sigma> <tau1> [<tau2> ...]   block composition
    perm partial <sigma> <i> <tau>           single-slot insertion
    dim (--preset NAME | --file F) --arity N [--free]
    equal (--preset | --file) LINCOMB LINCOMB
    check-rep (--preset | --file) (--algebra NAME | --rep-file F)
    compose (--preset | --file) --host T --at I --arg S
    act (--preset | --file) --term T --perm P
    axioms (--preset | --file) [--cases K] [--seed S] [--max-arity N]

Exit codes: 0 success (or: equal, PASS, all laws hold), 1 semantic
negative (not-equal, FAIL), 2 usage or parse errors. ``--json`` on any
subcommand prints a machine-readable mirror of the result instead of the
plain text. Output is deterministic given the flags and seed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import termio
from .free_operad import act as term_act
from .free_operad import circ as term_circ
from .laws import run_suite
from .permutations import block_compose, partial_compose
from .presets import PRESET_NAMES, get_preset
from .quotient import (DEFAULT_ARITY_CAP, Presentation, equal_mod_ideal,
                       free_dim, quotient_dim)
from .representations import (builtin_algebra, check_relations,
                              rep_from_binary, BUILTIN_ALGEBRAS)
from .termio import (ParseError, load_presentation, load_rep_file,
                     parse_lincomb, parse_permutation, parse_term, print_term)

USAGE_ERROR = 2
SEMANTIC_NO = 1


class CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load(args) -> Presentation:
    if getattr(args, "preset", None):
        try:
            return get_preset(args.preset)
        except KeyError as exc:
            raise CliError(str(exc)) from None
    path = getattr(args, "file", None)
    if not path:
        raise CliError("one of --preset or --file is required")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_presentation(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _cap(args) -> int:
    cap = args.max_arity if getattr(args, "max_arity", None) else DEFAULT_ARITY_CAP
    if cap > DEFAULT_ARITY_CAP:
        sys.stderr.write(
            f"warning: arity cap raised to {cap}; space dimensions grow "
            "factorially, expect long runtimes\n")
    return cap


def cmd_perm(args) -> int:
    sigma = parse_permutation(args.sigma)
    if args.subform == "block":
        blocks = [parse_permutation(b) for b in args.blocks]
        if len(blocks) != sigma.degree:
            raise CliError(
                f"degree {sigma.degree} needs {sigma.degree} blocks, "
                f"got {len(blocks)}")
        out = block_compose(sigma, blocks)
    else:
        tau = parse_permutation(args.tau)
        if not 1 <= args.index <= sigma.degree:
            raise CliError(f"slot {args.index} out of range 1..{sigma.degree}")
        out = partial_compose(sigma, args.index, tau)
    _emit(args, repr(out), {"command": f"perm-{args.subform}",
                            "result": list(out.word)})
    return 0


def cmd_dim(args) -> int:
    p = _load(args)
    cap = _cap(args)
    if args.free:
        value = free_dim(p, args.arity, max_arity=cap)
        kind = "free"
    else:
        value = quotient_dim(p, args.arity, max_arity=cap)
        kind = "quotient"
    _emit(args, str(value), {"command": "dim", "presentation": p.name,
                             "arity": args.arity, "kind": kind, "dim": value})
    return 0


def cmd_equal(args) -> int:
    p = _load(args)
    cap = _cap(args)
    v = parse_lincomb(args.left, p.signature)
    w = parse_lincomb(args.right, p.signature)
    same = equal_mod_ideal(p, v, w, max_arity=cap)
    _emit(args, "equal" if same else "not-equal",
          {"command": "equal", "presentation": p.name, "equal": same})
    return 0 if same else SEMANTIC_NO


def cmd_check_rep(args) -> int:
    p = _load(args)
    if args.algebra:
        spec = builtin_algebra(args.algebra)
        rep = rep_from_binary(p, spec.product)
    else:
        try:
            with open(args.rep_file, "r", encoding="utf-8") as fh:
                rep = load_rep_file(fh.read(), p)
        except OSError as exc:
            raise CliError(f"cannot read {args.rep_file}: {exc}") from None
    verdict = check_relations(rep)
    if verdict.ok:
        _emit(args, "PASS", {"command": "check-rep", "presentation": p.name,
                             "pass": True})
        return 0
    where = "[" + ";".join([str(verdict.witness_index[0]),
                            ",".join(str(j) for j in verdict.witness_index[1:])]) + "]"
    _emit(args, f"FAIL {verdict.witness_relation} at {where}",
          {"command": "check-rep", "presentation": p.name, "pass": False,
           "relation": verdict.witness_relation,
           "witness": list(verdict.witness_index)})
    return SEMANTIC_NO


def cmd_compose(args) -> int:
    p = _load(args)
    host = parse_term(args.host, p.signature)
    arg = parse_term(args.arg, p.signature)
    if not 1 <= args.at <= host.arity:
        raise CliError(f"slot {args.at} out of range 1..{host.arity}")
    out = term_circ(host, args.at, arg)
    _emit(args, print_term(out), {"command": "compose", "result": print_term(out)})
    return 0


def cmd_act(args) -> int:
    p = _load(args)
    if p.signature.mode != "symmetric":
        raise CliError(
            f"preset {p.name!r} is planar; the symmetric action is unsupported")
    t = parse_term(args.term, p.signature)
    s = parse_permutation(args.perm)
    if s.degree != t.arity:
        raise CliError(f"degree {s.degree} does not match arity {t.arity}")
    out = term_act(t, s)
    _emit(args, print_term(out), {"command": "act", "result": print_term(out)})
    return 0


def cmd_axioms(args) -> int:
    p = _load(args)
    rows = run_suite(p, cases=args.cases, seed=args.seed,
                     max_arity=min(args.max_arity or 5, 6))
    width = max(len(r.law) for r in rows)
    lines = []
    for r in rows:
        status = "PASS" if r.ok else f"FAIL ({r.failures}/{r.cases})"
        lines.append(f"{r.law.ljust(width)}  {status}")
    ok = all(r.ok for r in rows)
    _emit(args, "\n".join(lines),
          {"command": "axioms", "presentation": p.name,
           "laws": [{"law": r.law, "cases": r.cases, "failures": r.failures}
                    for r in rows],
           "pass": ok})
    return 0 if ok else SEMANTIC_NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="operads",
        description="symbolic computations with operads over exact rationals")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_source(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--preset", choices=PRESET_NAMES)
        g.add_argument("--file", help="path to a .opd presentation file")

    def add_json(sp):
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")

    p_perm = sub.add_parser("perm", help="permutation compositions")
    perm_sub = p_perm.add_subparsers(dest="subform", required=True)
    pb = perm_sub.add_parser("block")
    pb.add_argument("sigma")
    pb.add_argument("blocks", nargs="+")
    add_json(pb)
    pb.set_defaults(fn=cmd_perm)
    pp = perm_sub.add_parser("partial")
    pp.add_argument("sigma")
    pp.add_argument("index", type=int)
    pp.add_argument("tau")
    add_json(pp)
    pp.set_defaults(fn=cmd_perm)

    p_dim = sub.add_parser("dim", help="free or quotient dimensions")
    add_source(p_dim)
    p_dim.add_argument("--arity", type=int, required=True)
    p_dim.add_argument("--free", action="store_true")
    p_dim.add_argument("--max-arity", type=int, default=None)
    add_json(p_dim)
    p_dim.set_defaults(fn=cmd_dim)

    p_eq = sub.add_parser("equal", help="equality modulo the relation ideal")
    add_source(p_eq)
    p_eq.add_argument("left")
    p_eq.add_argument("right")
    p_eq.add_argument("--max-arity", type=int, default=None)
    add_json(p_eq)
    p_eq.set_defaults(fn=cmd_equal)
    # combinations may open with a negative coefficient ("-1*l(2,1)");
    # widen the matcher so a leading "-digit" reads as a positional
    p_eq._negative_number_matcher = re.compile(r"^-\d")

    p_cr = sub.add_parser("check-rep", help="verify an algebra over a presentation")
    add_source(p_cr)
    g = p_cr.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebra", choices=sorted(BUILTIN_ALGEBRAS))
    g.add_argument("--rep-file")
    add_json(p_cr)
    p_cr.set_defaults(fn=cmd_check_rep)

    p_co = sub.add_parser("compose", help="partial composition of terms")
    add_source(p_co)
    p_co.add_argument("--host", required=True)
    p_co.add_argument("--at", type=int, required=True)
    p_co.add_argument("--arg", required=True)
    add_json(p_co)
    p_co.set_defaults(fn=cmd_compose)

    p_act = sub.add_parser("act", help="symmetric action on a term")
    add_source(p_act)
    p_act.add_argument("--term", required=True)
    p_act.add_argument("--perm", required=True)
    add_json(p_act)
    p_act.set_defaults(fn=cmd_act)

    p_ax = sub.add_parser("axioms", help="randomized law suite")
    add_source(p_ax)
    p_ax.add_argument("--cases", type=int, default=100)
    p_ax.add_argument("--seed", type=int, default=0)
    p_ax.add_argument("--max-arity", type=int, default=None)
    add_json(p_ax)
    p_ax.set_defaults(fn=cmd_axioms)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.fn(args)
    except (ParseError, CliError, ValueError, KeyError) as exc:
        code = exc.code if isinstance(exc, CliError) else USAGE_ERROR
        msg = exc.message if isinstance(exc, ParseError) else str(exc)
        sys.stderr.write(f"error: {msg}\n")
        return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
