"""Command line interface.

Commands: ``classify`` (full pipeline), ``c1`` (Chern class only),
``sweep`` (character region table as CSV), ``selftest`` (embedded golden
checks).  Structured results go to stdout; human diagnostics to stderr.

Exit codes: 0 ok, 1 validation or numeric error, 2 unsupported case,
3 non-integral Chern class, 4 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chern import DEFAULT_INTEGRALITY_TOL, ohtsuki_c1
from .documents import parse_input_document, report_to_output
from .errors import LogSplitError, NonIntegralChernClass, UnsupportedCase
from .representation import build
from .selftest import run_selftest
from .splitting import character_root, classify

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNSUPPORTED = 2
EXIT_NONINTEGRAL = 3
EXIT_SELFTEST = 4

#: CLI default for the parallelism/clustering/snapping tolerance.
CLI_DEFAULT_TOL = 1e-9

MAX_SWEEP_STEPS = 10000


def _exit_code(exc: LogSplitError) -> int:
    if isinstance(exc, UnsupportedCase):
        return EXIT_UNSUPPORTED
    if isinstance(exc, NonIntegralChernClass):
        return EXIT_NONINTEGRAL
    return EXIT_ERROR


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _resolved_tols(args, doc) -> tuple[float, float]:
    tol = args.tol if args.tol is not None else (
        doc.tol if doc.tol is not None else CLI_DEFAULT_TOL
    )
    itol = args.integrality_tol if args.integrality_tol is not None else (
        doc.integrality_tol if doc.integrality_tol is not None else DEFAULT_INTEGRALITY_TOL
    )
    return tol, itol


def _cmd_classify(args) -> int:
    doc = parse_input_document(_read_input(args.input))
    tol, itol = _resolved_tols(args, doc)
    report = classify(doc.representation(), tol, itol)
    print(report_to_output(report).to_json())
    return EXIT_OK


def _cmd_c1(args) -> int:
    doc = parse_input_document(_read_input(args.input))
    tol, itol = _resolved_tols(args, doc)
    prep = build(doc.representation(), tol)
    chern = ohtsuki_c1(prep, itol)
    payload = {
        "c1": chern.c1,
        "raw_q_sum": chern.raw_q_sum,
        "integrality_defect": chern.integrality_defect,
        "ln_r_closure_defect": chern.ln_r_closure_defect,
        "exact": chern.exact,
    }
    print(json.dumps(payload, separators=(", ", ": ")))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    steps = args.steps
    if not 1 <= steps <= MAX_SWEEP_STEPS:
        print(f"error: --steps must lie in 1..{MAX_SWEEP_STEPS}", file=sys.stderr)
        return EXIT_ERROR
    lattice = [Fraction(i, steps) for i in range(steps)]
    labels = [str(q) for q in lattice]
    out = sys.stdout
    for i, q0 in enumerate(lattice):
        prefix = labels[i]
        rows = (
            f"{prefix},{labels[j]},{character_root(q0, lattice[j])}\n"
            for j in range(steps)
        )
        out.write("".join(rows))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    results = run_selftest(tol=args.tol if args.tol is not None else CLI_DEFAULT_TOL)
    failed = False
    for res in results:
        if res.passed:
            print(f"PASS {res.name}")
        else:
            failed = True
            print(f"FAIL {res.name}: {res.detail}")
    return EXIT_SELFTEST if failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logsplit",
        description=(
            "Splitting type of the canonical logarithmic extension of a "
            "monodromy representation on the 2- or 3-punctured projective line."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--tol",
            type=float,
            default=None,
            help=f"parallelism/clustering tolerance (default {CLI_DEFAULT_TOL})",
        )
        p.add_argument(
            "--integrality-tol",
            dest="integrality_tol",
            type=float,
            default=None,
            help=f"allowed distance of the q-sum from an integer (default {DEFAULT_INTEGRALITY_TOL})",
        )

    p_classify = sub.add_parser("classify", help="full classification of an input document")
    p_classify.add_argument("input", nargs="?", default="-", help="input file or - for stdin")
    add_tol_flags(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_c1 = sub.add_parser("c1", help="first Chern class and diagnostics only")
    p_c1.add_argument("input", nargs="?", default="-", help="input file or - for stdin")
    add_tol_flags(p_c1)
    p_c1.set_defaults(func=_cmd_c1)

    p_sweep = sub.add_parser("sweep", help="character region table over a rational lattice, CSV")
    p_sweep.add_argument("--steps", type=int, required=True, help="lattice subdivisions per axis")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_self = sub.add_parser("selftest", help="run the embedded golden checks")
    p_self.add_argument("--tol", type=float, default=None, help="tolerance passed to the pipeline")
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LogSplitError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return _exit_code(exc)
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return EXIT_ERROR


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
