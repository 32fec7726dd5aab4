"""
Contagem de pares (Γ₁, Γ₂) sobre F_{p^2} com Γ₁ + ᵗΓ₁^(p) + ᵗΓ₂^(p)Γ₂ = 0.

Γ₁ é m×m e Γ₂ é (n-m)×m. A enumeração é particionada pelo valor de Γ₂
(laço externo, distribuível entre processos); para cada Γ₂ o teste de todos os
Γ₁ é vetorizado com numpy. O caminho rápido conta, para cada Γ₂, as soluções
da condição de traço em cada entrada diagonal e usa que cada par fora da
diagonal tem p^2 soluções.
"""

import time
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import List, Optional, Tuple

import numpy as np

from core.config import Limits, load_limits
from core.errors import BoundExceededError, InvalidInputError, ensure
from core.logger import get_logger
from gf.field import FieldContext

logger = get_logger(__name__)


@dataclass(frozen=True)
class GammaInstance:
    """
    Attributes:
        ctx: Corpo F_{p^2}
        n, m: Assinatura, 1 <= m < n
        guard: Máximo de verificações elementares (p^{2nm})
    """

    ctx: FieldContext
    n: int
    m: int
    guard: int

    def __post_init__(self) -> None:
        if not 1 <= self.m < self.n:
            raise InvalidInputError(f"assinatura inválida (n={self.n}, m={self.m})")

    @classmethod
    def build(cls, p: int, n: int, m: int, limits: Optional[Limits] = None) -> "GammaInstance":
        limits = limits or load_limits()
        return cls(FieldContext.for_prime(p), n, m, limits.count_guard)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def gamma2_count(self) -> int:
        return self.ctx.q ** ((self.n - self.m) * self.m)

    @property
    def enumeration_size(self) -> int:
        return self.ctx.q ** (self.n * self.m)


def _decode(index: int, q: int, size: int) -> List[int]:
    """Dígitos de index na base q (size dígitos)."""
    digits = []
    for _ in range(size):
        index, d = divmod(index, q)
        digits.append(d)
    return digits


def _gamma2_arrays(p: int, n: int, m: int, index: int) -> Tuple[np.ndarray, np.ndarray]:
    q = p * p
    digits = np.array(_decode(index, q, (n - m) * m), dtype=np.int64).reshape(n - m, m)
    return digits // p, digits % p


def _hermitian_square(p: int, c: int, re: np.ndarray, im: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """ᵗΓ₂^(p) Γ₂ para Γ₂ = re + im·t."""
    # σ(Γ₂) = re - im·t
    out_re = (re.T @ re - c * (im.T @ im)) % p
    out_im = (re.T @ im - im.T @ re) % p
    return out_re, out_im


@lru_cache(maxsize=4)
def _all_gamma1(p: int, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """Todas as p^{2m²} matrizes Γ₁ como arrays (Q, m, m)."""
    q = p * p
    total = q ** (m * m)
    idx = np.arange(total, dtype=np.int64)
    digits = np.empty((total, m * m), dtype=np.int64)
    for k in range(m * m):
        digits[:, k] = idx % q
        idx //= q
    digits = digits.reshape(total, m, m)
    return digits // p, digits % p


def _count_gamma1(p: int, m: int, c_re: np.ndarray, c_im: np.ndarray) -> int:
    """Número de Γ₁ com Γ₁ + ᵗσ(Γ₁) + C = 0."""
    g_re, g_im = _all_gamma1(p, m)
    lhs_re = (g_re + np.transpose(g_re, (0, 2, 1)) + c_re) % p
    lhs_im = (g_im - np.transpose(g_im, (0, 2, 1)) + c_im) % p
    ok = ~(lhs_re.any(axis=(1, 2)) | lhs_im.any(axis=(1, 2)))
    return int(ok.sum())


def _count_chunk(args: Tuple[int, int, int, int, int, int]) -> int:
    """Contagem parcial para os índices de Γ₂ em [start, stop)."""
    p, c, n, m, start, stop = args
    total = 0
    for index in range(start, stop):
        re, im = _gamma2_arrays(p, n, m, index)
        c_re, c_im = _hermitian_square(p, c, re, im)
        total += _count_gamma1(p, m, c_re, c_im)
    return total


def _partition(total: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    bounds, start = [], 0
    for k in range(parts):
        stop = start + step + (1 if k < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def gamma_count_bruteforce(inst: GammaInstance, workers: int = 1, parts: Optional[int] = None) -> int:
    """
    Contagem exata por enumeração.

    Args:
        inst: Instância com guard
        workers: Processos (1 = sequencial)
        parts: Número de blocos de Γ₂ (default: 4 por processo); o total independe da partição

    Raises:
        BoundExceededError: p^{2nm} acima do guard
    """
    required = inst.enumeration_size
    if required > inst.guard:
        raise BoundExceededError("gamma_count_bruteforce p^{2nm}", inst.guard, required)

    start = time.perf_counter()
    logger.info(f"🔢 Contagem exaustiva (p={inst.p}, n={inst.n}, m={inst.m}): {required} pares")
    chunks = [
        (inst.p, inst.ctx.c, inst.n, inst.m, lo, hi)
        for lo, hi in _partition(inst.gamma2_count, parts or 4 * workers)
    ]
    if workers > 1:
        with Pool(workers) as pool:
            partials = pool.map(_count_chunk, chunks)
    else:
        partials = [_count_chunk(chunk) for chunk in chunks]
    total = sum(partials)
    logger.info(f"✅ Contagem exaustiva = {total} em {time.perf_counter() - start:.2f}s")
    return total


def gamma_count_fast(inst: GammaInstance) -> int:
    """
    Para cada Γ₂: Π_a #{x : x + x^p = -C_aa} · (p^2)^{m(m-1)/2}.

    Raises:
        BoundExceededError: p^{2(n-m)m} acima do guard
    """
    if inst.gamma2_count > inst.guard:
        raise BoundExceededError("gamma_count_fast p^{2(n-m)m}", inst.guard, inst.gamma2_count)
    p, c, n, m = inst.p, inst.ctx.c, inst.n, inst.m
    # número de x em F_{p^2} com traço 2a = t, para cada t em F_p
    trace_fibers = np.bincount([x.trace() for x in inst.ctx.elements()], minlength=p)
    off_diagonal = (p * p) ** (m * (m - 1) // 2)

    total = 0
    for index in range(inst.gamma2_count):
        re, im = _gamma2_arrays(p, n, m, index)
        c_re, c_im = _hermitian_square(p, c, re, im)
        per_gamma2 = off_diagonal
        for a in range(m):
            if c_im[a, a]:
                per_gamma2 = 0
                break
            per_gamma2 *= int(trace_fibers[(-c_re[a, a]) % p])
        total += per_gamma2
    return total


@dataclass(frozen=True)
class ClosedCount:
    """
    p^{2nm-m²} e sua fatoração p^{2(n-m)m}·p^{m(m-1)}·p^m.

    Attributes:
        value: Contagem
        exponents: (2(n-m)m, m(m-1), m)
    """

    value: int
    exponents: Tuple[int, int, int]


def gamma_count_closed(p: int, n: int, m: int) -> ClosedCount:
    if not 1 <= m < n:
        raise InvalidInputError(f"assinatura inválida (n={n}, m={m})")
    exponents = (2 * (n - m) * m, m * (m - 1), m)
    value = p ** (2 * n * m - m * m)
    ensure(p ** sum(exponents) == value, "gamma_count_closed.factorization", value, p ** sum(exponents))
    return ClosedCount(value=value, exponents=exponents)
