"""Subcomando verify: todas as suítes de invariantes até n+m <= max-nm."""

import argparse

from cli.emitters import Outcome
from cli.verify import run_suites
from core.config import Limits
from core.errors import InvalidInputError
from gf.field import FieldContext

HELP = "Suíte completa de invariantes (determinística)"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-nm", type=int, required=True, help="Maior n+m verificado")
    parser.add_argument("--p", type=int, required=True)


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    if args.max_nm < 2:
        raise InvalidInputError(f"--max-nm precisa ser >= 2, recebido {args.max_nm}")
    FieldContext.for_prime(args.p)
    report = run_suites(args.max_nm, args.p, limits)
    return Outcome(report=report, passed=report.passed)
