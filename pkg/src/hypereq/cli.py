"""Command-line interface.

Exit codes: 0 = equivalent (or bounded-equivalent for `oracle`),
1 = not equivalent (witness / context printed), 2 = error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alphabets import AlphabetSpec, problem
from .decide import DEFAULT_MAX_UNIVERSE, Verdict, decide
from .oracle import ContextBounds, oracle_equiv
from .reductions import (
    gen_stable_cd,
    gen_stable_dc,
    gen_supp_cnf,
    gen_suppmin_cd,
    gen_suppmin_dc,
    parse_dimacs,
    parse_qdimacs,
    write_instance,
)
from .semantics import shift, stable_models, supported_models, suppmin_models
from .syntax import ParseError, Program, parse_program

_GEN_FAMILIES = ("supp-cnf", "suppmin-dc", "suppmin-cd", "stable-cd", "stable-dc")


def _load(path: str) -> Program:
    return parse_program(Path(path).read_text())


def _alphabet(text: str) -> AlphabetSpec:
    return AlphabetSpec.parse(text)


def _fmt_model(m: frozenset) -> str:
    return "{" + ", ".join(sorted(m)) + "}"


def _witness_json(verdict: Verdict):
    w = verdict.witness
    if w is None:
        return None
    return {
        "kind": w.kind,
        "x": sorted(w.x) if w.x is not None else None,
        "y": sorted(w.y),
        "side": w.side,
        "detail": w.detail,
    }


def _check_report(args, verdict: Verdict) -> dict:
    return {
        "command": "check",
        "semantics": args.sem,
        "heads": args.heads.spec_string(),
        "bodies": args.bodies.spec_string(),
        "files": [args.p, args.q],
        "equivalent": verdict.equivalent,
        "shifted": verdict.shifted,
        "fast_path": verdict.fast_path,
        "witness": _witness_json(verdict),
        "stats": {
            "candidates": verdict.candidates,
            "elapsed_s": round(verdict.elapsed, 6),
            "universe": sorted(verdict.universe),
        },
    }


def _cmd_check(args) -> int:
    p = _load(args.p)
    q = _load(args.q)
    spec = problem(args.sem, args.heads, args.bodies)
    verdict = decide(p, q, spec, jobs=args.jobs, max_universe=args.max_universe)
    if args.json:
        print(json.dumps(_check_report(args, verdict), indent=2))
    elif verdict.equivalent:
        print(f"equivalent ({args.sem}, heads={args.heads.spec_string()}, "
              f"bodies={args.bodies.spec_string()})")
    else:
        w = verdict.witness
        print(f"not equivalent ({args.sem}); witness: side={w.side} "
              f"y={_fmt_model(w.y)}" + (f" x={_fmt_model(w.x)}" if w.x is not None else "")
              + f" detail={w.detail}")
    return 0 if verdict.equivalent else 1


def _cmd_models(args) -> int:
    p = _load(args.program)
    fn = {"stable": stable_models, "supported": supported_models,
          "suppmin": suppmin_models}[args.sem]
    models = fn(p)
    if args.json:
        print(json.dumps({"semantics": args.sem, "models": [sorted(m) for m in models]}))
    else:
        for m in models:
            print(_fmt_model(m))
    return 0


def _cmd_shift(args) -> int:
    print(shift(_load(args.program)).to_text())
    return 0


def _cmd_oracle(args) -> int:
    from .alphabets import bounding_universe

    p = _load(args.p)
    q = _load(args.q)
    spec = problem(args.sem, args.heads, args.bodies)
    universe = bounding_universe(shift(p), shift(q), spec) | frozenset(args.extra_atoms)
    bounds = ContextBounds(universe, args.max_rules, args.max_head, args.max_body,
                           args.facts_only)
    result = oracle_equiv(p, q, spec, bounds)
    if args.json:
        print(json.dumps({
            "command": "oracle",
            "semantics": args.sem,
            "equivalent": result.equivalent,
            "bounded": True,
            "context": result.context.to_text().splitlines() if result.context else None,
            "contexts_examined": result.contexts_examined,
            "elapsed_s": round(result.elapsed, 6),
        }, indent=2))
    elif result.equivalent:
        print(f"bounded-equivalent after {result.contexts_examined} contexts "
              "(not a proof of equivalence)")
    else:
        print("distinguishing context found:")
        print(result.context.to_text())
    return 0 if result.equivalent else 1


def _cmd_gen(args) -> int:
    text = Path(args.formula).read_text()
    a = frozenset(args.set_a)
    b = frozenset(args.set_b)
    if args.family == "supp-cnf":
        inst = gen_supp_cnf(parse_dimacs(text), a)
    elif args.family == "suppmin-dc":
        inst = gen_suppmin_dc(parse_qdimacs(text), a)
    elif args.family == "suppmin-cd":
        inst = gen_suppmin_cd(parse_qdimacs(text), a or frozenset({"g0"}), b)
    elif args.family == "stable-cd":
        inst = gen_stable_cd(parse_qdimacs(text), a, b)
    else:
        inst = gen_stable_dc(parse_program(text), a, b, args.bodies_kind)
    out = write_instance(inst, args.out)
    print(str(out))
    return 0


def _atom_list(text: str) -> list:
    return [a for a in text.split(",") if a]


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hypereq",
        description="Relativized hyperequivalence of propositional disjunctive "
                    "logic programs under stable, supported, and supported-minimal "
                    "semantics, for context classes HB(A',B').",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide hyperequivalence of two programs")
    check.add_argument("p")
    check.add_argument("q")
    check.add_argument("--sem", required=True, choices=("supp", "suppmin", "stable"))
    check.add_argument("--heads", type=_alphabet, default=AlphabetSpec.complement(),
                       help="head alphabet, e.g. direct:a,b or complement: (default)")
    check.add_argument("--bodies", type=_alphabet, default=AlphabetSpec.complement(),
                       help="body alphabet (ignored for --sem supp)")
    check.add_argument("--json", action="store_true")
    check.add_argument("--max-universe", type=int, default=DEFAULT_MAX_UNIVERSE)
    check.add_argument("--jobs", type=int, default=1)
    check.set_defaults(fn=_cmd_check)

    models = sub.add_parser("models", help="list models of one program")
    models.add_argument("program")
    models.add_argument("--sem", required=True,
                        choices=("stable", "supported", "suppmin"))
    models.add_argument("--json", action="store_true")
    models.set_defaults(fn=_cmd_models)

    sh = sub.add_parser("shift", help="print the shift of a program")
    sh.add_argument("program")
    sh.set_defaults(fn=_cmd_shift)

    orc = sub.add_parser("oracle", help="bounded context search (ground truth)")
    orc.add_argument("p")
    orc.add_argument("q")
    orc.add_argument("--sem", required=True, choices=("supp", "suppmin", "stable"))
    orc.add_argument("--heads", type=_alphabet, default=AlphabetSpec.complement())
    orc.add_argument("--bodies", type=_alphabet, default=AlphabetSpec.complement())
    orc.add_argument("--max-rules", type=int, default=2)
    orc.add_argument("--max-head", type=int, default=1)
    orc.add_argument("--max-body", type=int, default=2)
    orc.add_argument("--facts-only", action="store_true")
    orc.add_argument("--extra-atoms", type=_atom_list, default=[])
    orc.add_argument("--json", action="store_true")
    orc.set_defaults(fn=_cmd_oracle)

    gen = sub.add_parser("gen", help="generate a labeled test instance")
    gen.add_argument("family", choices=_GEN_FAMILIES)
    gen.add_argument("formula", help="DIMACS/QDIMACS file (program file for stable-dc)")
    gen.add_argument("--set-a", type=_atom_list, default=[])
    gen.add_argument("--set-b", type=_atom_list, default=[])
    gen.add_argument("--bodies-kind", choices=("direct", "complement"), default="direct")
    gen.add_argument("--out", required=True)
    gen.set_defaults(fn=_cmd_gen)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
