"""Command-line interface: run session blocks, generate corpora, check suites.

Exit codes: 0 determinate verdict, 2 input error, 3 inconclusive
(randomized construction or membership gave up), 4 internal invariant
breach (always a bug).  The default seed comes from --seed, then the
session, then the REDSOP_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import os
import sys

from .corpus import CorpusSpec
from .session import (
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL,
    EXIT_OK,
    SCHEMA,
    corpus_report,
    render_human,
    render_report,
    run_block,
)
from .suites import REGISTRY, run_suites

SEED_ENV = "REDSOP_SEED"


def _env_seed():
    value = os.environ.get(SEED_ENV)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        return None


def _emit(report, human):
    sys.stdout.write(render_human(report) if human else render_report(report))


def _cmd_run(args):
    if args.expr is not None:
        text = args.expr
    elif args.target in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.target, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    default_seed = args.seed if args.seed is not None else _env_seed()
    report, code = run_block(text, default_seed, timings=args.timings)
    _emit(report, args.human)
    return code


def _cmd_corpus(args):
    try:
        spec = CorpusSpec(
            n=args.vars,
            max_gens=args.max_gens,
            max_degree=args.max_degree,
            squarefree=args.squarefree,
            count=args.count,
            seed=args.seed if args.seed is not None else (_env_seed() or 0),
            p=args.characteristic,
            force=args.force,
        )
        report, code = corpus_report(spec, args.command)
    except ValueError as exc:
        report = {"schema": SCHEMA, "command": "generate-corpus",
                  "status": "input_error", "error": str(exc), "timing_ms": None}
        code = EXIT_INPUT_ERROR
    _emit(report, args.human)
    return code


def _cmd_check(args):
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    seed = args.seed if args.seed is not None else (_env_seed() or 0)
    opts = {}
    if args.vars:
        opts["n_values"] = tuple(int(v) for v in args.vars.split(","))
    if args.max_gens:
        opts["max_gens"] = args.max_gens
    if args.max_degree:
        opts["max_degree"] = args.max_degree
    try:
        for name in names:
            if name != "all" and name not in REGISTRY:
                raise KeyError(f"unknown suite {name!r}")
        results = run_suites(names, seed, args.count, **opts)
    except KeyError as exc:
        report = {"schema": SCHEMA, "command": "check-theorems",
                  "status": "input_error", "error": str(exc.args[0]), "timing_ms": None}
        _emit(report, args.human)
        return EXIT_INPUT_ERROR
    passed = all(r.passed for r in results)
    report = {
        "schema": SCHEMA,
        "command": "check-theorems",
        "seed": seed,
        "status": "ok",
        "timing_ms": None,
        "suites": [r.to_dict() for r in results],
        "passed": passed,
    }
    _emit(report, args.human)
    return EXIT_OK if passed else EXIT_INTERNAL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="redsop",
        description="Systems of parameters, reducing sequences and "
                    "Cohen-Macaulay tests over graded polynomial rings.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    run_p = sub.add_parser("run", help="run a session block from a file, stdin or -e")
    run_p.add_argument("target", nargs="?",
                       help="session file, or '-' for standard input")
    run_p.add_argument("-e", "--expr", help="inline session text")
    run_p.add_argument("--seed", type=int, help="default seed when the session has none")
    run_p.add_argument("--human", action="store_true", help="render the report as text")
    run_p.add_argument("--timings", action="store_true",
                       help="fill in timing_ms (breaks byte-reproducibility)")
    run_p.set_defaults(fn=_cmd_run)

    corpus_p = sub.add_parser("corpus", help="emit deterministic monomial-ideal fixtures")
    corpus_p.add_argument("--count", type=int, default=10)
    corpus_p.add_argument("--vars", type=int, default=3, help="number of variables")
    corpus_p.add_argument("--max-gens", type=int, default=4)
    corpus_p.add_argument("--max-degree", type=int, default=3)
    corpus_p.add_argument("--squarefree", action="store_true")
    corpus_p.add_argument("--characteristic", type=int, default=32003)
    corpus_p.add_argument("--seed", type=int)
    corpus_p.add_argument("--command", default="dim",
                          help="command embedded in every fixture block")
    corpus_p.add_argument("--force", action="store_true",
                          help="override the desk-scale bound caps")
    corpus_p.add_argument("--human", action="store_true")
    corpus_p.set_defaults(fn=_cmd_corpus)

    check_p = sub.add_parser("check", help="run the theorem-verification suites")
    check_p.add_argument("--suites", default="all",
                         help="comma-separated suite names, or 'all'")
    check_p.add_argument("--count", type=int,
                         help="instances per suite (default: per-suite counts)")
    check_p.add_argument("--seed", type=int)
    check_p.add_argument("--vars", help="comma-separated variable counts, e.g. 2,3,4")
    check_p.add_argument("--max-gens", type=int)
    check_p.add_argument("--max-degree", type=int)
    check_p.add_argument("--human", action="store_true")
    check_p.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
