"""
Congruência da imagem por V e o ideal do estrato.

V(ω(Σ̄)) é comparado com o somando livre R⊗V(Q) (2m <= n) ou R⊗M^(p)
(n < 2m); os resíduos fora do somando só envolvem os u_ij, e sua anulação
define o ideal (u_ij).
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from core.errors import ensure
from core.logger import get_logger
from deformation.universal import RVector, deformation_context, sigma_bar_generators, u_name
from dieudonne.canonical import canonical_M, vq_expected_indices
from gf.field import FieldContext, FqElt
from gf.matrix import FqMatrix

logger = get_logger(__name__)

# {j': {gerador: {índice da base: coeficiente}}}
ResidueTable = Dict[int, Dict[str, Dict[int, FqElt]]]


@dataclass(frozen=True)
class ResidueReport:
    """
    Attributes:
        n, m: Assinatura
        target: Índices (0-based, twist 1) do somando livre
        residues: Tabela de resíduos por gerador de ω(Σ̄)
        labels: Rótulos dos índices da base ("e6" etc.)
    """

    n: int
    m: int
    target: Tuple[int, ...]
    residues: ResidueTable
    labels: Tuple[str, ...]


def target_summand(n: int, m: int, ctx: FieldContext) -> List[int]:
    """Índices de V(Q) (2m <= n) ou de M^(p) = e_[1,2m] (n < 2m)."""
    dctx = deformation_context(n, m, ctx)
    if 2 * m <= n:
        return vq_expected_indices(dctx.base)
    indices = canonical_M(n, m, ctx).coordinate_indices()
    ensure(indices is not None, "target_summand.coordinate", "subespaço coordenado", None)
    return sorted(indices)


def expected_residue(n: int, m: int, i: int, ctx: FieldContext) -> Tuple[int, FqElt]:
    """-u_ij e_{N+1-i}^(p) para i <= min(m, n-m), -u_ij e_{n+1-i}^(p) caso contrário."""
    N = n + m
    index = N + 1 - i if i <= min(m, n - m) else n + 1 - i
    return index - 1, -ctx.one()


def v_image_residues(n: int, m: int, ctx: FieldContext) -> ResidueReport:
    """
    Resíduos de V(ω(Σ̄)) módulo o somando livre.

    Raises:
        ConsistencyError: resíduo constante, dependência em v, índice no somando ou
            forma diferente da esperada
    """
    dctx = deformation_context(n, m, ctx)
    mod = dctx.base
    target = target_summand(n, m, ctx)
    outside = [k for k in range(mod.dim) if k not in target]

    table: ResidueTable = {}
    for jp, gen in enumerate(sigma_bar_generators(dctx), start=1):
        image: RVector = gen.apply(mod.V_matrix)
        ensure(
            image.const.select_columns(outside).is_zero(),
            "v_image_residues.point_in_target",
            True,
            False,
            f"j'={jp}",
        )
        per_gen: Dict[str, Dict[int, FqElt]] = {}
        for name, row in image.linear.items():
            residue = {k: row.entry(0, k) for k in outside if row.entry(0, k)}
            if residue:
                per_gen[name] = residue
        table[jp] = per_gen

        for name in per_gen:
            ensure(name.startswith("u_"), "v_image_residues.no_v", "apenas u", name, f"j'={jp}")
        for i in range(1, n - m + 1):
            k, coeff = expected_residue(n, m, i, ctx)
            ensure(k not in target, "v_image_residues.disjoint", f"{k} fora do somando", target)
            ensure(
                per_gen.get(u_name(i, jp)) == {k: coeff},
                "v_image_residues.shape",
                {mod.label(k): str(coeff)},
                {mod.label(x): str(c) for x, c in per_gen.get(u_name(i, jp), {}).items()},
                f"i={i}, j'={jp}",
            )

    logger.info(f"✅ Resíduos de V(ω(Σ̄)) ({n},{m}) conferidos")
    return ResidueReport(
        n=n,
        m=m,
        target=tuple(target),
        residues=table,
        labels=tuple(mod.label(k) for k in range(mod.dim)),
    )


def sfol_ideal(n: int, m: int, ctx: FieldContext) -> List[str]:
    """
    Geradores nilpotentes cuja anulação equivale a V(ω(Σ̄)) ⊂ R⊗(somando).

    Raises:
        ConsistencyError: vetores de resíduo dependentes ou ideal diferente de (u_ij)
    """
    report = v_image_residues(n, m, ctx)
    dim = 2 * (n + m)
    ideal = set()
    for jp, per_gen in report.residues.items():
        rows = []
        for name, residue in sorted(per_gen.items()):
            row = FqMatrix.zeros(ctx, 1, dim)
            for k, coeff in residue.items():
                row.re[0, k], row.im[0, k] = coeff.a, coeff.b
            rows.append(row)
            ideal.add(name)
        if rows:
            stacked = rows[0]
            for row in rows[1:]:
                stacked = stacked.vstack(row)
            ensure(stacked.rank() == len(rows), "sfol_ideal.independent", len(rows), stacked.rank(), f"j'={jp}")

    expected = {u_name(i, j) for i in range(1, n - m + 1) for j in range(1, m + 1)}
    ensure(ideal == expected, "sfol_ideal.all_u", sorted(expected), sorted(ideal))
    return sorted(ideal)
