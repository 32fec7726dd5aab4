"""Subcomando strata: poset EO completo, em texto, JSON ou DOT."""

import argparse

from cli.emitters import Outcome
from core.config import Limits
from core.schemas import DiagramEntry, StrataReport, StratumEntry
from weyl.export import poset_to_dict, poset_to_dot
from weyl.poset import compare_with_diagram, eo_minimal_in_s_sharp, eo_poset

HELP = "Poset dos estratos EO de assinatura (n,m)"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    poset = eo_poset(args.n, args.m, limits)
    data = poset_to_dict(poset)

    diagram = None
    if (args.n, args.m) == (4, 2):
        comparison = compare_with_diagram(poset)
        diagram = DiagramEntry(
            closure_equal=comparison.closure_equal,
            covers_equal=comparison.covers_equal,
            missing_covers=[list(edge) for edge in comparison.missing_covers],
            extra_covers=[list(edge) for edge in comparison.extra_covers],
        )

    report = StrataReport(
        n=args.n,
        m=args.m,
        strata=[StratumEntry(**entry) for entry in data["strata"]],
        covers=data["covers"],
        maximal=[str(w) for w in poset.maximal()],
        minimal=[str(w) for w in poset.minimal()],
        s_sharp_minimal=[str(w) for w in eo_minimal_in_s_sharp(poset)],
        diagram=diagram,
    )
    passed = len(report.maximal) == 1 and len(report.minimal) == 1 and (diagram is None or diagram.closure_equal)
    return Outcome(report=report, passed=passed, dot=poset_to_dot(poset))
