"""Subcomando count: contagens de Γ (fechada, exaustiva, rápida, oráculo) e graus."""

import argparse
import time

from cli.emitters import Outcome
from core.config import Limits
from core.errors import ensure
from core.logger import get_logger
from core.schemas import CountReport
from counting.degrees import degree_table
from counting.gamma import GammaInstance, gamma_count_bruteforce, gamma_count_closed, gamma_count_fast
from counting.oracle import isotropic_subspace_oracle, subspace_count

logger = get_logger(__name__)

HELP = "Contagem de pares (Γ₁, Γ₂) e tabela de graus"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    start = time.perf_counter()
    inst = GammaInstance.build(args.p, args.n, args.m, limits)
    closed = gamma_count_closed(inst.p, inst.n, inst.m)
    skipped = []

    brute = None
    if inst.enumeration_size <= inst.guard:
        brute = gamma_count_bruteforce(inst, workers=limits.workers)
        ensure(brute == closed.value, "count.brute_force", closed.value, brute)
    else:
        skipped.append(f"brute_force: requer {inst.enumeration_size}, guard {inst.guard}")

    fast = None
    if inst.gamma2_count <= inst.guard:
        fast = gamma_count_fast(inst)
        ensure(fast == closed.value, "count.fast", closed.value, fast)
    else:
        skipped.append(f"fast: requer {inst.gamma2_count}, guard {inst.guard}")

    oracle = None
    required = subspace_count(inst.n + inst.m, inst.m, inst.ctx.q)
    if required <= limits.oracle_guard:
        oracle = isotropic_subspace_oracle(inst, limits=limits)
        ensure(oracle == closed.value, "count.oracle", closed.value, oracle)
    else:
        skipped.append(f"oracle: requer {required}, guard {limits.oracle_guard}")

    for entry in skipped:
        logger.warning(f"⚠️ Contagem pulada por limite: {entry}")

    degrees = degree_table(inst.p, inst.n, inst.m, ctx=inst.ctx)
    report = CountReport(
        p=inst.p,
        n=inst.n,
        m=inst.m,
        closed_form=closed.value,
        exponents=list(closed.exponents),
        brute_force=brute,
        fast=fast,
        oracle=oracle,
        degrees=degrees.as_dict(),
        skipped=skipped,
        elapsed=round(time.perf_counter() - start, 3),
    )
    return Outcome(report=report)
