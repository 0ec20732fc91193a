"""Command line: ``beta-exact eval|table|verify|oracle``.

Exit codes: 0 success, 1 verification failure, 2 usage or parity error,
3 table capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .bernoulli_euler import TableCapacityError
from .exact import PiMonomial
from .series import format_decimal, oracle, render_decimal
from .special_values import beta_odd_lambda, lambda_even, zeta_even_bernoulli
from .verify import SUITES, run

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

FUNCTIONS = ("beta", "zeta", "lambda")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    function: str = "beta"
    argument: int = 1
    digits: int = 30
    max_order: int = 20
    tolerance: str = "1e-25"
    format: str = "exact"
    suite: str = "all"

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise UsageError("--digits must be >= 1")
        if self.max_order < 0:
            raise UsageError("--max-order must be >= 0")


def _check_parity(function: str, argument: int) -> None:
    if function == "beta":
        if argument < 1 or argument % 2 == 0:
            raise UsageError(
                f"beta({argument}): beta closed forms exist at odd arguments only")
    elif argument < 2 or argument % 2:
        raise UsageError(
            f"{function}({argument}): {function} closed forms exist at even arguments >= 2 only")


def closed_form(function: str, argument: int) -> PiMonomial:
    _check_parity(function, argument)
    if function == "beta":
        return beta_odd_lambda((argument + 1) // 2).value
    if function == "zeta":
        return zeta_even_bernoulli(argument // 2).value
    return lambda_even(argument // 2).value


def _json_record(function: str, argument: int, v: PiMonomial, digits: int) -> str:
    return json.dumps({
        "function": function,
        "argument": argument,
        "coeff_num": v.coeff.numerator,
        "coeff_den": v.coeff.denominator,
        "pi_power": v.pi_power,
        "decimal": format_decimal(render_decimal(v, digits), digits),
    })


def cmd_eval(cfg: CliConfig, out=sys.stdout) -> int:
    v = closed_form(cfg.function, cfg.argument)
    if cfg.format == "exact":
        print(v, file=out)
    elif cfg.format == "decimal":
        print(format_decimal(render_decimal(v, cfg.digits), cfg.digits), file=out)
    else:
        print(_json_record(cfg.function, cfg.argument, v, cfg.digits), file=out)
    return EXIT_OK


def table_arguments(function: str, max_order: int) -> list[int]:
    if function == "beta":
        return [2 * n - 1 for n in range(1, max_order + 1)]
    return [2 * n for n in range(1, max_order + 1)]


def cmd_table(cfg: CliConfig, out=sys.stdout) -> int:
    for arg in table_arguments(cfg.function, cfg.max_order):
        v = closed_form(cfg.function, arg)
        dec = format_decimal(render_decimal(v, cfg.digits), cfg.digits)
        print(f"{arg}\t{v}\t{dec}", file=out)
    return EXIT_OK


def cmd_verify(cfg: CliConfig, out=sys.stdout) -> int:
    try:
        tol = Decimal(cfg.tolerance)
    except InvalidOperation:
        raise UsageError(f"bad --tolerance {cfg.tolerance!r}") from None
    results = run(cfg.suite, cfg.max_order, cfg.digits, tol)
    failed = 0
    for r in results:
        print(r.line(), file=out)
        failed += not r.passed
    print(f"SUMMARY checks={len(results)} failed={failed}", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oracle(cfg: CliConfig, out=sys.stdout) -> int:
    if cfg.function == "beta":
        if cfg.argument < 1:
            raise UsageError("beta oracle needs argument >= 1")
    else:
        _check_parity(cfg.function, cfg.argument)
    est = oracle(cfg.function, cfg.argument, cfg.digits)
    print(est.text(), file=out)
    print(f"error_bound={est.error_bound:.3E} terms={est.terms_used} method={est.method}",
          file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beta-exact",
        description="Exact special values of zeta, lambda and beta with numerical cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="closed form of one value")
    p.add_argument("function", choices=FUNCTIONS)
    p.add_argument("argument", type=int)
    p.add_argument("--format", choices=("exact", "decimal", "json"), default="exact")
    p.add_argument("--digits", type=int, default=30)

    p = sub.add_parser("table", help="closed forms up to a maximum order")
    p.add_argument("function", choices=FUNCTIONS)
    p.add_argument("--max-order", type=int, default=20)
    p.add_argument("--digits", type=int, default=30)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--max-order", type=int, default=20)
    p.add_argument("--tolerance", default="1e-25")
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")

    p = sub.add_parser("oracle", help="series value with error bound")
    p.add_argument("function", choices=FUNCTIONS)
    p.add_argument("argument", type=int)
    p.add_argument("--digits", type=int, default=30)
    return parser


_COMMANDS = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify, "oracle": cmd_oracle}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(**{k: v for k, v in vars(args).items()})
        return _COMMANDS[cfg.command](cfg, out)
    except UsageError as e:
        print(f"beta-exact: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TableCapacityError as e:
        print(f"beta-exact: capacity: {e}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
