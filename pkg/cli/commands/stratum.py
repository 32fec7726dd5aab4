"""Subcomando stratum: estatísticas de um único shuffle."""

import argparse

from cli.emitters import Outcome
from core.config import Limits
from core.schemas import StratumReport
from weyl.shuffles import ShuffleLabel, special_elements, stratum_info

HELP = "Estatísticas do estrato rotulado por w"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--w", type=str, required=True, help="Notação de uma linha, ex. 125634 ou 1,2,10,...")


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    info = stratum_info(ShuffleLabel.parse(args.w, args.n, args.m))
    special = {}
    if args.m >= 1:
        special = {name: str(w) for name, w in special_elements(args.n, args.m)._asdict().items()}
    report = StratumReport(
        n=args.n,
        m=args.m,
        w=str(info.label.w),
        length=info.length,
        a_sigma=info.a_sigma,
        in_s_sharp=info.in_s_sharp,
        is_fol=info.is_fol,
        is_ordinary=info.is_ordinary,
        is_core=info.is_core,
        fiber_dim=info.fiber_dim,
        special=special,
    )
    return Outcome(report=report)
