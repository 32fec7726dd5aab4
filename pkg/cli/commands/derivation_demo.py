"""Subcomando derivation-demo: ξ = x∂x + ∂y tem ξ^(p) = x∂x."""

import argparse

from cli.emitters import Outcome
from core.config import Limits
from core.schemas import DerivationReport, MonomialEntry
from gf.derivation import p_power_of_derivation

HELP = "Potência p do campo x∂x + ∂y, monômio a monômio"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--degree-bound", type=int, default=None, help="Grau total máximo (default: 2p)")


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    bound = args.degree_bound if args.degree_bound is not None else 2 * args.p
    result = p_power_of_derivation(args.p, bound)
    report = DerivationReport(
        p=result.p,
        degree_bound=result.degree_bound,
        xi_p=result.xi_p,
        example_p_closed=result.example_p_closed,
        d_dy_p_closed=result.d_dy_p_closed,
        monomials=[
            MonomialEntry(a=c.monomial[0], b=c.monomial[1], lhs=c.lhs, rhs=c.rhs, passed=c.passed)
            for c in result.checks
        ],
        passed=result.passed,
    )
    return Outcome(report=report, passed=result.passed)
