"""
Filtração canônica: a palavra V^{-2r} F^{2r+1} V^{-1}(0), o pedaço M e V(Q).

A palavra é avaliada por dois motores independentes (tabelas do reticulado e
álgebra linear no módulo padrão); qualquer divergência é ConsistencyError.
"""

from dataclasses import dataclass
from typing import List, Tuple

from core.errors import InvalidInputError, ensure
from core.logger import get_logger
from dieudonne.lattice import (
    LatticePair,
    StepName,
    expected_after_f,
    expected_after_v_inverse,
    lattice_step,
    r_of,
    word_steps,
)
from dieudonne.module import DieudonneModule, standard_fol_module
from dieudonne.subspace import Subspace, map_image, map_kernel, map_preimage, twist
from gf.field import FieldContext

logger = get_logger(__name__)


def apply_step(mod: DieudonneModule, sub: Subspace, which: StepName) -> Subspace:
    """Um passo da palavra sobre um subespaço de D₀ (twist 0 → twist 0)."""
    if which == "F":
        return map_image(mod, "F", twist(sub))
    if which == "V^-1":
        return map_preimage(mod, "V", twist(sub))
    raise InvalidInputError(f"passo desconhecido: {which!r}")


@dataclass(frozen=True)
class WordStep:
    """Estado após um passo: rótulo do prefixo aplicado e o par do reticulado."""

    word: str
    pair: LatticePair
    expected: LatticePair


@dataclass(frozen=True)
class CanonicalWord:
    """
    Resultado de canonical_word.

    Attributes:
        r: Índice da janela r/(r+1) < m/n <= (r+1)/(r+2)
        lattice_result: Par final pelo motor de reticulado
        matrix_result: Subespaço final pelo motor matricial
        trace: Estados intermediários (ambos os motores coincidem em cada um)
    """

    n: int
    m: int
    r: int
    lattice_result: LatticePair
    matrix_result: Subspace
    trace: Tuple[WordStep, ...]


def _prefix_label(steps: List[StepName]) -> str:
    # "F^3 V^-1" etc., na notação de composição (último aplicado à esquerda)
    groups: List[Tuple[str, int]] = []
    for s in steps:
        if groups and groups[-1][0] == s:
            groups[-1] = (s, groups[-1][1] + 1)
        else:
            groups.append((s, 1))
    parts = []
    for name, count in reversed(groups):
        if name == "F":
            parts.append("F" if count == 1 else f"F^{count}")
        else:
            parts.append("V^-1" if count == 1 else f"V^-{count}")
    return " ".join(parts) + "(0)"


def canonical_word(n: int, m: int, ctx: FieldContext) -> CanonicalWord:
    """
    Avalia V^{-2r} F^{2r+1} V^{-1}(0) pelos dois motores.

    Raises:
        InvalidInputError: 2m <= n
        ConsistencyError: motores divergem ou fórmula intermediária falha
    """
    r = r_of(n, m)
    mod = standard_fol_module(n, m, ctx)
    steps = word_steps(r)

    pair = LatticePair(0, 0)
    sub = Subspace.zero(mod)
    trace: List[WordStep] = []
    f_count = v_count = 0
    for idx, step in enumerate(steps):
        pair = lattice_step(n, m, pair, step)
        sub = apply_step(mod, sub, step)
        ensure(
            sub == Subspace.lattice(mod, pair.a, pair.b),
            "canonical_word.engines",
            str(pair),
            sub.coordinate_indices(),
            f"passo {idx} ({step}), (n,m)=({n},{m})",
        )
        if idx == 0:
            expected = LatticePair(n, m)
        elif step == "F":
            f_count += 1
            expected = expected_after_f(n, m, f_count)
        else:
            v_count += 1
            expected = expected_after_v_inverse(n, m, r, v_count)
        ensure(pair == expected, "canonical_word.intermediate", str(expected), str(pair), f"passo {idx}")
        trace.append(WordStep(_prefix_label(steps[: idx + 1]), pair, expected))

    final = LatticePair(2 * m, r * n - (r - 1) * m)
    ensure(pair == final, "canonical_word.closed_form", str(final), str(pair), f"(n,m)=({n},{m})")
    logger.info(f"✅ Palavra canônica ({n},{m}), r={r}: {pair}")
    return CanonicalWord(n=n, m=m, r=r, lattice_result=pair, matrix_result=sub, trace=tuple(trace))


def canonical_M(n: int, m: int, ctx: FieldContext) -> Subspace:
    """
    Parte Σ do pedaço designado da filtração canônica.

    2m <= n: parte Σ de F V⁻¹(0) = D(m,m), isto é e_[1,m].
    n < 2m: parte Σ de V^{-2r} F^{2r+1} V^{-1}(0), isto é e_[1,2m].
    """
    mod = standard_fol_module(n, m, ctx)
    if 2 * m <= n:
        piece = apply_step(mod, map_kernel(mod, "V"), "F")
    else:
        piece = canonical_word(n, m, ctx).matrix_result
    return piece.sigma_part()


def vq_expected_indices(mod: DieudonneModule) -> List[int]:
    n, m = mod.n, mod.m
    if 2 * m <= n:
        return mod.e_range(1, m)
    return mod.e_range(1, n - m) + mod.e_range(n + 1, 2 * m)


def q_subspace(mod: DieudonneModule) -> Subspace:
    """Q = Span{f_[m+1,2m]}."""
    return Subspace.of_indices(mod, mod.f_range(mod.m + 1, 2 * mod.m))


def vq_image(n: int, m: int, ctx: FieldContext) -> Subspace:
    """
    V(Q) ⊂ D₀^(p), conferido contra o span esperado e contra M^(p).

    Raises:
        ConsistencyError: span diferente do esperado ou contenção falha
    """
    mod = standard_fol_module(n, m, ctx)
    image = map_image(mod, "V", q_subspace(mod))
    expected = Subspace.of_indices(mod, vq_expected_indices(mod), twist=1)
    ensure(image == expected, "vq_image.span", expected.coordinate_indices(), image.coordinate_indices())

    m_twisted = twist(canonical_M(n, m, ctx))
    ensure(m_twisted.contains(image), "vq_image.contained_in_M", True, False, f"(n,m)=({n},{m})")
    equal = m_twisted == image
    ensure(equal == (2 * m <= n), "vq_image.equality_iff_2m_le_n", 2 * m <= n, equal)
    return image
