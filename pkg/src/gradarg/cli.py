"""Command-line front end.

Four subcommands: solve (extension families), rank (argument orders),
postulates (checker battery and random sweeps), instantiate (stratified
knowledge bases). JSON output always carries the same top-level keys:
command, params, result, witnesses. Exit codes: 0 success, 1 negative
domain answer or resource bound, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .errors import (AtomBoundError, ConstraintViolatedError,
                     FormulaParseError, FrameworkParseError,
                     KnowledgeBaseError, NoExtensionError,
                     NotAdmissibleError, NotExpandableError,
                     NotReachingError, TooLargeError, TooManyArgumentsError)
from .formats import parse, write
from .framework import ArgumentSet, ArgumentationFramework
from .instantiate import (build_defeat_graph, graded_inference, parse_kb,
                          preferred_subtheories, ps_correspondence_check)
from .kernel import GradeParams
from .logic import format_formula, parse_formula
from .postulates import (CheckResult, PostulateVerdict, corpus_checks,
                         named_counterexamples_match)
from .ranking import ArgumentPartialOrder, absolute_rank, contextual_rank
from .semantics import (Existence, JustificationMode, Semantics,
                        enumerate_extensions)

_DOMAIN_ERRORS = (TooLargeError, TooManyArgumentsError, AtomBoundError,
                  ConstraintViolatedError, NotAdmissibleError,
                  NotReachingError, NotExpandableError, NoExtensionError)
_USAGE_ERRORS = (FrameworkParseError, KnowledgeBaseError, FormulaParseError,
                 ValueError)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_framework(args: argparse.Namespace) -> ArgumentationFramework:
    fmt = None if args.format == "auto" else args.format
    return parse(_read_input(args.input), fmt)


def _emit(command: str, params: dict[str, Any], result: Any,
          witnesses: list[Any]) -> None:
    print(json.dumps({"command": command, "params": params, "result": result,
                      "witnesses": witnesses}, indent=2))


def _set_labels(x: ArgumentSet) -> list[str]:
    return [arg.label for arg in x]


def _add_io_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", "-i", default="-",
                     help="framework file, or - for stdin (default)")
    sub.add_argument("--format", choices=("auto", "tgf", "apx"),
                     default="auto")
    sub.add_argument("--max-args", type=_positive, default=None,
                     help="override the enumeration cap")


def _cmd_solve(args: argparse.Namespace) -> int:
    fw = _load_framework(args)
    params = GradeParams(args.l, args.m, args.n)
    family = enumerate_extensions(fw, Semantics(args.semantics), params,
                                  max_args=args.max_args)
    witnesses = []
    if family.witness is not None:
        witnesses.append({
            "clause": family.witness.clause,
            "arguments": (None if family.witness.arguments is None
                          else _set_labels(family.witness.arguments))})
    if args.output == "json":
        _emit("solve",
              {"semantics": args.semantics, "l": args.l, "m": args.m,
               "n": args.n},
              {"existence": family.existence.value,
               "extensions": [_set_labels(e) for e in family.extensions]},
              witnesses)
    else:
        if family.existence is Existence.FOUND:
            for ext in family.extensions:
                print(ext)
        else:
            detail = family.witness.clause if family.witness else ""
            print(f"{family.existence.value}: {detail}")
    return 0 if family.existence is Existence.FOUND else 1


def _print_order_text(order: ArgumentPartialOrder) -> None:
    classes = order.equivalence_classes()
    for i, members in enumerate(classes):
        print(f"[{i}] " + ", ".join(members))
    for i, j in order.hasse_edges():
        print(f"[{i}] > [{j}]")


def _order_json(order: ArgumentPartialOrder) -> dict[str, Any]:
    return {
        "kind": order.kind,
        "signatures": {label: sorted(list(g) for g in sig.grades)
                       for label, sig in order.signatures.items()},
        "classes": [list(c) for c in order.equivalence_classes()],
        "hasse": [list(e) for e in order.hasse_edges()],
    }


def _cmd_rank(args: argparse.Namespace) -> int:
    fw = _load_framework(args)
    if args.contextual is not None:
        labels = [part.strip() for part in args.contextual.split(",")
                  if part.strip()]
        order = contextual_rank(fw, fw.set_of(labels))
        params: dict[str, Any] = {"mode": "contextual", "start": labels}
    else:
        semantics = Semantics(args.semantics)
        order = absolute_rank(fw, semantics, max_args=args.max_args)
        params = {"mode": "absolute", "semantics": semantics.value}
    if args.output == "dot":
        print(order.to_dot(), end="")
    elif args.output == "json":
        _emit("rank", params, _order_json(order), [])
    else:
        _print_order_text(order)
    return 0


def _witness_json(verdict: PostulateVerdict) -> dict[str, Any]:
    w = verdict.witness
    assert w is not None
    return {
        "postulate": verdict.postulate,
        "semantics": w.semantics.value,
        "pair": list(w.pair),
        "relation": w.relation.name,
        "detail": w.detail,
        "framework": {"arguments": list(w.framework.labels),
                      "attacks": [list(p) for p in w.framework.attacks]},
    }


def _verdict_json(verdict: PostulateVerdict) -> dict[str, Any]:
    return {"postulate": verdict.postulate,
            "semantics": [s.value for s in verdict.semantics],
            "result": verdict.result.value}


def _cmd_postulates(args: argparse.Namespace) -> int:
    matched, battery = named_counterexamples_match()
    corpus = (corpus_checks(count=args.corpus, seed=args.seed)
              if args.corpus > 0 else ())
    corpus_ok = all(v.result is CheckResult.HOLDS for v in corpus)
    witnesses = [_witness_json(v) for v in battery + tuple(corpus)
                 if v.witness is not None]
    if args.output == "json":
        _emit("postulates",
              {"corpus": args.corpus, "seed": args.seed},
              {"battery": [_verdict_json(v) for v in battery],
               "battery_matches_expected": matched,
               "corpus": [_verdict_json(v) for v in corpus]},
              witnesses)
    else:
        print("fixture battery:")
        for verdict in battery:
            print(f"  {verdict}")
        print(f"battery matches expected verdicts: {str(matched).lower()}")
        if corpus:
            print(f"random corpus ({args.corpus} frameworks, "
                  f"seed {args.seed}):")
            for verdict in corpus:
                print(f"  {verdict}")
    return 0 if matched and corpus_ok else 1


def _formula_set(formulas) -> str:
    return "{" + ", ".join(sorted(format_formula(f) for f in formulas)) + "}"


def _cmd_instantiate(args: argparse.Namespace) -> int:
    kb = parse_kb(_read_input(args.kb))
    base_params = {"kb": args.kb, "emit": args.emit}
    if args.emit == "ps":
        subtheories = preferred_subtheories(kb)
        if args.output == "json":
            _emit("instantiate", base_params,
                  {"subtheories": [sorted(map(format_formula, s))
                                   for s in subtheories]}, [])
        else:
            for s in subtheories:
                print(_formula_set(s))
        return 0
    if args.emit == "graph":
        graph = build_defeat_graph(kb, max_args=args.max_args)
        if args.output == "json":
            _emit("instantiate", base_params,
                  {"arguments": {
                      label: {"premises": sorted(
                          format_formula(f)
                          for f in graph.argument_of(label).premises),
                          "claim": format_formula(
                              graph.argument_of(label).claim)}
                      for label in graph.framework.labels},
                   "defeats": [list(p) for p in graph.framework.attacks],
                   "attacks": [list(p) for p in sorted(graph.attack_pairs)]},
                  [])
        else:
            sys.stdout.write(write(graph.framework, args.graph_format))
            for label in graph.framework.labels:
                print(f"{label} = {graph.argument_of(label)}",
                      file=sys.stderr)
        return 0
    if args.emit == "check":
        report = ps_correspondence_check(kb, max_args=args.max_args)
        if args.output == "json":
            _emit("instantiate", base_params,
                  {"matches": report.matches,
                   "stable_equals_preferred": report.stable_equals_preferred,
                   "subtheories": [sorted(map(format_formula, s))
                                   for s in report.subtheory_premise_sets],
                   "stable_premise_sets": [
                       sorted(map(format_formula, s))
                       for s in report.stable_premise_sets]},
                  [{"detail": report.detail}])
        else:
            print(str(report.matches).lower())
            print(report.detail)
        return 0 if report.matches else 1
    # infer
    if args.goal is None:
        raise ValueError("--emit infer requires --goal")
    params = GradeParams(args.l, args.m, args.n)
    report = graded_inference(kb, params, parse_formula(args.goal),
                              JustificationMode(args.mode),
                              max_args=args.max_args)
    if args.output == "json":
        _emit("instantiate",
              {**base_params, "goal": format_formula(report.goal),
               "mode": args.mode, "l": args.l, "m": args.m, "n": args.n},
              {"holds": report.holds,
               "premise_sets": [sorted(map(format_formula, s))
                                for s in report.premise_sets]},
              [])
    else:
        print(str(report.holds).lower())
    return 0 if report.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradarg",
        description="Graded argumentation solver: extension families, "
                    "argument rankings, postulate checks, and stratified "
                    "knowledge-base instantiation.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser(
        "solve", help="enumerate extension families")
    _add_io_options(solve)
    solve.add_argument("--semantics", required=True,
                       choices=[s.value for s in Semantics])
    solve.add_argument("--l", type=_positive, required=True)
    solve.add_argument("--m", type=_positive, required=True)
    solve.add_argument("--n", type=_positive, required=True)
    solve.add_argument("--output", choices=("text", "json"), default="text")
    solve.set_defaults(func=_cmd_solve)

    rank = subparsers.add_parser("rank", help="derive argument orders")
    _add_io_options(rank)
    mode = rank.add_mutually_exclusive_group(required=True)
    mode.add_argument("--contextual", metavar="LABELS", default=None,
                      help="comma-separated context, empty string for none")
    mode.add_argument("--absolute", action="store_true")
    rank.add_argument("--semantics", default="preferred",
                      choices=("grounded", "preferred", "stable"))
    rank.add_argument("--output", choices=("text", "json", "dot"),
                      default="text")
    rank.set_defaults(func=_cmd_rank)

    postulates = subparsers.add_parser(
        "postulates", help="run the postulate battery")
    postulates.add_argument("--corpus", type=int, default=10,
                            help="random frameworks to sweep (0 disables)")
    postulates.add_argument("--seed", type=int, default=0)
    postulates.add_argument("--output", choices=("text", "json"),
                            default="text")
    postulates.set_defaults(func=_cmd_postulates)

    instantiate = subparsers.add_parser(
        "instantiate", help="work with stratified knowledge bases")
    instantiate.add_argument("--kb", required=True,
                             help="knowledge-base file, or - for stdin")
    instantiate.add_argument("--emit",
                             choices=("graph", "ps", "check", "infer"),
                             default="check")
    instantiate.add_argument("--graph-format", choices=("tgf", "apx"),
                             default="tgf")
    instantiate.add_argument("--goal", default=None)
    instantiate.add_argument("--mode", choices=("sceptical", "credulous"),
                             default="sceptical")
    instantiate.add_argument("--l", type=_positive, default=1)
    instantiate.add_argument("--m", type=_positive, default=1)
    instantiate.add_argument("--n", type=_positive, default=1)
    instantiate.add_argument("--output", choices=("text", "json"),
                             default="text")
    instantiate.add_argument("--max-args", type=_positive, default=None)
    instantiate.set_defaults(func=_cmd_instantiate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
