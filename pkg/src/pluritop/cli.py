"""Command line interface.

Exit codes: 0 success or positive classification, 1 identity-suite failure,
2 usage or format error, 3 negative classification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .jsonio import (
    FormatError,
    classification_to_json,
    dumps,
    operator_from_json,
    operator_to_json,
    report_to_json,
    symbol_from_json,
    symbol_to_json,
)
from .opcore import ArityMismatch, WindowMismatch
from .scalars import FLOAT_ZERO_TOL
from .space import DegreeOverflow, SpaceParams
from .suite import run_suite
from .toeplitz import Verdict, classify, recover_symbol, toeplitz_op

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NOT_TOEPLITZ = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(doc, output: str | None):
    text = dumps(doc)
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _load_json(path: str | None, flag: str):
    if path is None:
        raise UsageError(f"{flag} FILE is required")
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _check_config(args, need=("n", "m", "degree")):
    for name in need:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--{name} is required")
        lower = 0 if name == "degree" else 1
        if v < lower:
            raise UsageError(f"--{name} must be >= {lower}, got {v}")


def cmd_verify(args) -> int:
    _check_config(args)
    checks = run_suite(args.n, args.m, args.degree, args.mode, args.seed)
    doc = {
        "config": {"n": args.n, "m": args.m, "degree": args.degree,
                   "mode": args.mode, "seed": args.seed},
        "zero_threshold": 0 if args.mode == "exact" else FLOAT_ZERO_TOL,
        "checks": [
            {"name": c.name, "expect_zero": c.expect_zero, "passed": c.passed,
             **report_to_json(c.report)}
            for c in checks
        ],
    }
    doc["all_passed"] = all(c.passed for c in checks)
    _emit(doc, args.output)
    return EXIT_OK if doc["all_passed"] else EXIT_FAILED


def cmd_toeplitz(args) -> int:
    _check_config(args, need=("m", "degree"))
    symbol = symbol_from_json(_load_json(args.symbol, "--symbol"), args.mode)
    if args.n is not None and args.n != symbol.n:
        raise UsageError(f"--n {args.n} does not match the symbol's n={symbol.n}")
    top = args.degree + max(symbol.g.degree, 0)
    params = SpaceParams(symbol.n, args.m, top, args.mode)
    _emit(operator_to_json(toeplitz_op(symbol, params, args.degree)), args.output)
    return EXIT_OK


def _load_operator(args):
    T = operator_from_json(_load_json(args.operator, "--operator"), args.mode)
    if args.m is not None and args.m != T.params.m:
        raise UsageError(f"--m {args.m} does not match the operator's m={T.params.m}")
    if args.n is not None and args.n != T.params.n:
        raise UsageError(f"--n {args.n} does not match the operator's n={T.params.n}")
    if T.arity_in != 1 or T.arity_out != 1:
        raise UsageError("the operator must act on H_m (arity 1 -> 1)")
    return T


def cmd_classify(args) -> int:
    T = _load_operator(args)
    result = classify(T, args.degree)
    _emit(classification_to_json(result), args.output)
    return EXIT_OK if result.verdict is Verdict.TOEPLITZ else EXIT_NOT_TOEPLITZ


def cmd_recover(args) -> int:
    T = _load_operator(args)
    _emit(symbol_to_json(recover_symbol(T)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pluritop",
        description="Toeplitz operators with pluriharmonic symbol on H_m of the unit ball.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="dimension of the ball")
    common.add_argument("--m", type=int, help="kernel exponent")
    common.add_argument("--degree", type=int, help="trusted degree window")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--seed", type=int, default=0, help="seed for random symbols")
    common.add_argument("--output", help="output file (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("toeplitz", parents=[common], help="matrix of T_f for a symbol file")
    p.add_argument("--symbol", metavar="FILE")
    p.set_defaults(func=cmd_toeplitz)
    p = sub.add_parser("classify", parents=[common], help="Brown-Halmos test and symbol recovery")
    p.add_argument("--operator", metavar="FILE")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("recover", parents=[common], help="symbol recovery without the test")
    p.add_argument("--operator", metavar="FILE")
    p.set_defaults(func=cmd_recover)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, FormatError, WindowMismatch, DegreeOverflow, ArityMismatch) as exc:
        print(f"pluritop {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
