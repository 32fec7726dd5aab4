"""Subcomando canfilt: traço da palavra canônica V^{-2r} F^{2r+1} V^{-1}(0)."""

import argparse

from cli.emitters import Outcome
from core.config import Limits
from core.schemas import CanonicalWordReport, WordStepEntry
from dieudonne.canonical import canonical_word
from dieudonne.module import standard_fol_module
from dieudonne.subspace import span_labels
from gf.field import FieldContext

HELP = "Filtração canônica para n < 2m, pelos motores de reticulado e matricial"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--p", type=int, required=True)


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    ctx = FieldContext.for_prime(args.p)
    n, m = args.n, args.m
    word = canonical_word(n, m, ctx)
    mod = standard_fol_module(n, m, ctx)
    r = word.r
    report = CanonicalWordReport(
        n=n,
        m=m,
        p=ctx.p,
        r=r,
        result=[word.lattice_result.a, word.lattice_result.b],
        expected=[2 * m, r * n - (r - 1) * m],
        matrix_result=span_labels(mod, word.matrix_result),
        trace=[
            WordStepEntry(
                word=step.word,
                a=step.pair.a,
                b=step.pair.b,
                expected_a=step.expected.a,
                expected_b=step.expected.b,
            )
            for step in word.trace
        ],
    )
    return Outcome(report=report)
