"""Subcomando dieudonne: tabelas de F e V, núcleos, imagens e matriz de Hasse."""

import argparse

from cli.emitters import Outcome
from core.config import Limits
from core.schemas import DieudonneReport
from dieudonne.canonical import canonical_M, vq_image
from dieudonne.checks import compositions_vanish, exactness, omega_subspace, p_zero, p_zero_check, pairing_checks
from dieudonne.hasse import hasse_matrix
from dieudonne.module import standard_fol_module
from dieudonne.subspace import Subspace, map_image, map_kernel, span_labels
from gf.field import FieldContext

HELP = "Módulo de Dieudonné padrão em S_fol"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--p", type=int, required=True)


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    ctx = FieldContext.for_prime(args.p)
    n, m = args.n, args.m
    mod = standard_fol_module(n, m, ctx)

    spans = {
        "ker F": map_kernel(mod, "F"),
        "ker V": map_kernel(mod, "V"),
        "im F": map_image(mod, "F", Subspace.whole(mod, twist=1)),
        "im V": map_image(mod, "V", Subspace.whole(mod)),
        "omega": omega_subspace(mod),
        "P0": p_zero(mod),
    }
    results = {
        "exactness": exactness(mod),
        "compositions_vanish": compositions_vanish(mod),
        "pairing": pairing_checks(mod),
        "p_zero": p_zero_check(mod),
    }
    hasse = hasse_matrix(n, m, ctx)
    checks = {name: result["is_valid"] for name, result in results.items()}
    checks["hasse_zero_iff_2m_le_n"] = hasse.is_zero() == (2 * m <= n)

    report = DieudonneReport(
        n=n,
        m=m,
        p=ctx.p,
        c=ctx.c,
        tables=mod.tables(),
        spans={name: span_labels(mod, sub) for name, sub in spans.items()},
        canonical_M=span_labels(mod, canonical_M(n, m, ctx)),
        vq_image=span_labels(mod, vq_image(n, m, ctx)),
        hasse_matrix=[[str(x) for x in row] for row in hasse.rows()],
        hasse_zero=hasse.is_zero(),
        checks=checks,
        warnings=[w for result in results.values() for w in result["warnings"]],
    )
    return Outcome(report=report, passed=all(checks.values()))
