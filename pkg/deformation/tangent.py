"""
Sistema tangente de S♯ no ponto de S_fol.

Incógnitas φ ∈ Hom(P, H(Σ)/P) e ψ ∈ Hom(P₀, H₀(Σ)/P₀), com a restrição
φ|_{P₀} = ι∘ψ, onde ι: H₀(Σ)/P₀ → H(Σ)/P é induzida pela inclusão.
P = ω(Σ) com ω = ker F, H₀ = ker V e P₀ = P ∩ H₀, todos calculados a partir
das matrizes do módulo padrão.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from core.errors import ensure
from core.logger import get_logger
from deformation.universal import deformation_context, sigma_generators
from dieudonne.checks import omega_subspace, p_zero
from dieudonne.module import DieudonneModule
from dieudonne.subspace import Subspace, map_kernel
from gf.field import FieldContext
from gf.matrix import FqMatrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class TangentDims:
    """
    Attributes:
        total_dim: Dimensão do espaço de soluções (φ, ψ)
        foliation_dim: Fatia ψ = 0
        fiber_dim: Fatia φ = 0
        phi_unknowns: n·m
        psi_unknowns: (n-m)·m
    """

    total_dim: int
    foliation_dim: int
    fiber_dim: int
    phi_unknowns: int
    psi_unknowns: int


class _Quotient:
    """Coordenadas em sub/base via redução pela RREF de base."""

    def __init__(self, base: Subspace, ambient_cols: Sequence[int]):
        self.base = base
        _, self.pivots = base.basis.rref()
        self.cols = [k for k in ambient_cols if k not in self.pivots]

    @property
    def dim(self) -> int:
        return len(self.cols)

    def coords(self, row: FqMatrix) -> FqMatrix:
        """Coordenadas (1×dim) da classe de `row` no quociente."""
        reduced = row
        for r, pc in enumerate(self.pivots):
            coeff = reduced.entry(0, pc)
            if coeff:
                reduced = reduced - self.base.basis.select_rows([r]).scale(coeff)
        return reduced.select_columns(self.cols)


def _sub_coords(sub: Subspace, row: FqMatrix) -> List:
    """Coordenadas de row (em sub) na base RREF de sub: valores nas colunas pivô."""
    _, pivots = sub.basis.rref()
    return [row.entry(0, pc) for pc in pivots]


def constraint_matrix(mod: DieudonneModule) -> Tuple[FqMatrix, int, int]:
    """
    Matriz das equações φ(x) - ι(ψ(x)) = 0, x na base de P₀.

    Returns:
        (matriz, número de incógnitas φ, número de incógnitas ψ)
    """
    ctx = mod.ctx
    e_cols = list(range(mod.N))
    P = omega_subspace(mod).sigma_part()
    H0 = map_kernel(mod, "V")
    P0 = P.intersect(H0)
    H0_sigma = H0.sigma_part()
    ensure(P.contains(P0), "tangent_system.P0_in_P", True, False)
    ensure(H0_sigma.contains(P0), "tangent_system.P0_in_H0", True, False)

    quot_P = _Quotient(P, e_cols)
    # complemento de P₀ em H₀(Σ): classes dos vetores de H₀(Σ) módulo P₀
    quot_P0 = _Quotient(P0, e_cols)
    complement_rows = [
        row for row in (H0_sigma.basis.select_rows([r]) for r in range(H0_sigma.dim))
        if not quot_P0.coords(row).is_zero()
    ]
    complement = Subspace.span(_stack(ctx, complement_rows, mod.dim), 0) if complement_rows else None
    q0_basis = [complement.basis.select_rows([t]) for t in range(complement.dim)] if complement else []
    iota = [quot_P.coords(b) for b in q0_basis]

    n_phi_rows, width = P.dim, quot_P.dim
    n_psi_rows, psi_width = P0.dim, len(q0_basis)
    phi_unknowns = n_phi_rows * width
    psi_unknowns = n_psi_rows * psi_width

    equations: List[List] = []
    for s in range(P0.dim):
        lam = _sub_coords(P, P0.basis.select_rows([s]))
        for k in range(width):
            eq = [ctx.zero()] * (phi_unknowns + psi_unknowns)
            for r in range(n_phi_rows):
                eq[r * width + k] = lam[r]
            for t in range(psi_width):
                eq[phi_unknowns + s * psi_width + t] = -iota[t].entry(0, k)
            equations.append(eq)
    matrix = FqMatrix.from_rows(ctx, equations, ncols=phi_unknowns + psi_unknowns)
    return matrix, phi_unknowns, psi_unknowns


def _stack(ctx: FieldContext, rows: List[FqMatrix], width: int) -> FqMatrix:
    out = FqMatrix.zeros(ctx, 0, width)
    for row in rows:
        out = out.vstack(row)
    return out


def tangent_system(n: int, m: int, ctx: FieldContext) -> TangentDims:
    """
    Dimensões do sistema tangente no ponto de S_fol.

    Raises:
        ConsistencyError: dimensões diferentes de (nm, m², 0)
    """
    mod = deformation_context(n, m, ctx).base
    matrix, n_phi, n_psi = constraint_matrix(mod)
    phi_cols = list(range(n_phi))
    psi_cols = list(range(n_phi, n_phi + n_psi))

    def _nullity(cols: List[int]) -> int:
        if matrix.nrows == 0:
            return len(cols)
        return len(cols) - matrix.select_columns(cols).rank()

    dims = TangentDims(
        total_dim=_nullity(phi_cols + psi_cols),
        foliation_dim=_nullity(phi_cols),
        fiber_dim=_nullity(psi_cols),
        phi_unknowns=n_phi,
        psi_unknowns=n_psi,
    )
    ensure(dims.total_dim == n * m, "tangent_system.total", n * m, dims.total_dim)
    ensure(dims.foliation_dim == m * m, "tangent_system.foliation", m * m, dims.foliation_dim)
    ensure(dims.fiber_dim == 0, "tangent_system.fiber", 0, dims.fiber_dim)
    logger.info(f"✅ Sistema tangente ({n},{m}): total {dims.total_dim}, folheação {dims.foliation_dim}")
    return dims


def foliation_generators(n: int, m: int, ctx: FieldContext) -> List[str]:
    """
    Direções ε_g cuja deformação de ω(Σ) ainda contém P₀.

    Para x em P₀ com x = Σ c_k s_k no ponto, a condição de primeira ordem é
    Σ c_k s_k' ∈ P, sendo s_k' a parte em ε_g do k-ésimo gerador.
    """
    dctx = deformation_context(n, m, ctx)
    mod = dctx.base
    sigma = sigma_generators(dctx)
    P = Subspace.span(_stack(ctx, [s.const for s in sigma], mod.dim), 0)
    P0 = p_zero(mod)
    const_rows = _stack(ctx, [s.const for s in sigma], mod.dim)

    kept: List[str] = []
    for gen in dctx.ring.generators:
        preserved = True
        for r in range(P0.dim):
            x = P0.basis.select_rows([r])
            # x = c · const_rows
            solution = const_rows.transpose().solve(x.transpose())
            ensure(solution is not None, "foliation_generators.P0_in_P", True, False)
            drift = FqMatrix.zeros(ctx, 1, mod.dim)
            for k, s in enumerate(sigma):
                if gen in s.linear:
                    drift = drift + s.linear[gen].scale(solution.entry(k, 0))
            if not P.contains(Subspace.span(drift, 0)):
                preserved = False
                break
        if preserved:
            kept.append(gen)
    ensure(len(kept) == m * m, "foliation_generators.count", m * m, len(kept))
    ensure(all(g.startswith("v_") for g in kept), "foliation_generators.only_v", "apenas v", kept)
    return kept
