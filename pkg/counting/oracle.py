"""
Oráculo independente da contagem de Γ: subespaços isotrópicos.

Enumera todos os subespaços de dimensão m de F_{p^2}^{n+m} pela forma
escalonada reduzida (um por conjunto de colunas pivô e escolha das entradas
livres) e conta os que são isotrópicos para a forma hermitiana
(u, v) = ᵗu^(p)·J·v e se projetam isomorficamente nas últimas m coordenadas.
"""

import itertools
import time
from typing import Iterator, List, Optional, Tuple

import numpy as np

from core.config import Limits, load_limits
from core.errors import BoundExceededError
from core.logger import get_logger
from counting.gamma import GammaInstance
from gf.field import FieldContext
from gf.matrix import FqMatrix

logger = get_logger(__name__)


def hermitian_form(ctx: FieldContext, n: int, m: int) -> FqMatrix:
    """J = [[0, 0, 1_m], [0, 1_{n-m}, 0], [1_m, 0, 0]] (anti-diagonal em blocos)."""
    size = n + m
    J = FqMatrix.zeros(ctx, size, size)
    for k in range(m):
        J.re[k, n + k] = 1
        J.re[n + k, k] = 1
    for k in range(m, n):
        J.re[k, k] = 1
    return J


def _free_positions(pivots: Tuple[int, ...], size: int) -> List[Tuple[int, int]]:
    """Entradas livres da RREF com esses pivôs: à direita do pivô e fora das colunas pivô."""
    pivot_set = set(pivots)
    return [(row, col) for row, pc in enumerate(pivots) for col in range(pc + 1, size) if col not in pivot_set]


def subspace_count(size: int, dim: int, q: int) -> int:
    """
    Número de subespaços de dimensão `dim` em F_q^size (binomial gaussiano).

    Examples:
        >>> subspace_count(3, 1, 9)
        91
    """
    return sum(q ** len(_free_positions(pivots, size)) for pivots in itertools.combinations(range(size), dim))


def rref_subspaces(ctx: FieldContext, size: int, dim: int) -> Iterator[FqMatrix]:
    """Gera cada subespaço de dimensão `dim` uma única vez, pela sua RREF."""
    elements = [(x.a, x.b) for x in ctx.elements()]
    for pivots in itertools.combinations(range(size), dim):
        free = _free_positions(pivots, size)
        for choice in itertools.product(elements, repeat=len(free)):
            re = np.zeros((dim, size), dtype=np.int64)
            im = np.zeros((dim, size), dtype=np.int64)
            for row, pc in enumerate(pivots):
                re[row, pc] = 1
            for (row, col), (a, b) in zip(free, choice):
                re[row, col], im[row, col] = a, b
            yield FqMatrix(ctx, re, im)


def isotropic_subspace_oracle(
    inst: GammaInstance,
    isotropy: bool = True,
    limits: Optional[Limits] = None,
) -> int:
    """
    Conta subespaços H de dimensão m, isotrópicos e com projeção bijetiva nas últimas m coordenadas.

    Args:
        inst: Instância (p, n, m)
        isotropy: Com False o filtro de isotropia é desligado e o resultado é
            o número de gráficos de mapas lineares, p^{2nm}
        limits: Limites (oracle_guard)

    Raises:
        BoundExceededError: número de subespaços acima do oracle_guard
    """
    limits = limits or load_limits()
    ctx, n, m = inst.ctx, inst.n, inst.m
    size = n + m
    required = subspace_count(size, m, ctx.q)
    if required > limits.oracle_guard:
        raise BoundExceededError("isotropic_subspace_oracle subespaços", limits.oracle_guard, required)

    start = time.perf_counter()
    J = hermitian_form(ctx, n, m)
    last = list(range(n, size))
    kept = 0
    for basis in rref_subspaces(ctx, size, m):
        if basis.select_columns(last).rank() != m:
            continue
        if isotropy and not (basis.frob() @ J @ basis.transpose()).is_zero():
            continue
        kept += 1
    logger.info(
        f"🔢 Oráculo isotrópico (p={inst.p}, n={n}, m={m}): {required} subespaços, {kept} mantidos "
        f"em {time.perf_counter() - start:.2f}s"
    )
    return kept
