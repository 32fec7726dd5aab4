"""
Deformação universal de primeira ordem do módulo padrão sobre
R = k[u, v]/m².

Geradores: u_(i,j) para 1 <= i <= n-m, 1 <= j <= m (coluna n-m+j) e
v_(l,j) para 1 <= l <= m, 1 <= j <= m (linha n+l, coluna n-m+j).
Nomes internos "u_<i>_<j>" e "v_<l>_<j>"; indexed_name() devolve os índices
absolutos u_{i,n-m+j} e v_{n+l,n-m+j}.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from core.errors import ensure
from core.logger import get_logger
from dieudonne.checks import omega_subspace
from dieudonne.module import DieudonneModule, standard_fol_module
from dieudonne.subspace import Subspace
from gf.defring import DefRingElt, DefRingSuite, defring_ops
from gf.field import FieldContext, FqElt
from gf.matrix import FqMatrix

logger = get_logger(__name__)


def u_name(i: int, j: int) -> str:
    return f"u_{i}_{j}"


def v_name(l: int, j: int) -> str:
    return f"v_{l}_{j}"


def indexed_name(name: str, n: int, m: int) -> str:
    """
    Examples:
        >>> indexed_name("u_1_1", 4, 2)
        'u_{1,3}'
        >>> indexed_name("v_2_1", 4, 2)
        'v_{6,3}'
    """
    kind, a, b = name.split("_")
    row = int(a) if kind == "u" else n + int(a)
    return f"{kind}_{{{row},{n - m + int(b)}}}"


@dataclass
class RVector:
    """
    Vetor de D₀ ⊗ R: parte constante e uma linha por gerador.

    Attributes:
        const: Linha 1×dim
        linear: {gerador: linha 1×dim}
    """

    const: FqMatrix
    linear: Dict[str, FqMatrix] = field(default_factory=dict)

    def coeff(self, k: int) -> DefRingElt:
        return DefRingElt.build(self.const.entry(0, k), {g: row.entry(0, k) for g, row in self.linear.items()})

    def reduce(self) -> FqMatrix:
        return self.const

    def apply(self, matrix: FqMatrix) -> "RVector":
        """Mapa R-linear com matriz constante."""
        return RVector(self.const @ matrix, {g: row @ matrix for g, row in self.linear.items()})

    def support(self) -> Dict[int, DefRingElt]:
        out = {}
        for k in range(self.const.ncols):
            c = self.coeff(k)
            if c:
                out[k] = c
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RVector):
            return NotImplemented
        gens = set(self.linear) | set(other.linear)
        zero = FqMatrix.zeros(self.const.ctx, 1, self.const.ncols)
        return self.const == other.const and all(
            self.linear.get(g, zero) == other.linear.get(g, zero) for g in gens
        )


def r_pairing(mod: DieudonneModule, x: RVector, y: RVector) -> DefRingElt:
    """{x, y}_φ estendida R-bilinearmente (termos ε·ε descartados)."""
    gram = mod.pairing_matrix
    const = (x.const @ gram @ y.const.transpose()).entry(0, 0)
    linear: Dict[str, FqElt] = {}
    for g in set(x.linear) | set(y.linear):
        value = mod.ctx.zero()
        if g in x.linear:
            value = value + (x.linear[g] @ gram @ y.const.transpose()).entry(0, 0)
        if g in y.linear:
            value = value + (x.const @ gram @ y.linear[g].transpose()).entry(0, 0)
        linear[g] = value
    return DefRingElt.build(const, linear)


@dataclass(frozen=True)
class DeformationContext:
    """
    Módulo base, anel de deformação e geradores u/v.

    Attributes:
        base: Módulo padrão no ponto
        ring: Suíte de R
        u_generators: Nomes u_(i,j) em ordem (i, j)
        v_generators: Nomes v_(l,j) em ordem (l, j)
    """

    base: DieudonneModule
    ring: DefRingSuite
    u_generators: Tuple[str, ...]
    v_generators: Tuple[str, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    def unit(self, k: int) -> FqMatrix:
        return self.base.unit_rows([k])


def deformation_context(n: int, m: int, ctx: FieldContext) -> DeformationContext:
    mod = standard_fol_module(n, m, ctx)
    us = tuple(u_name(i, j) for i in range(1, n - m + 1) for j in range(1, m + 1))
    vs = tuple(v_name(l, j) for l in range(1, m + 1) for j in range(1, m + 1))
    return DeformationContext(base=mod, ring=defring_ops(ctx, us + vs), u_generators=us, v_generators=vs)


def _scaled(dctx: DeformationContext, k: int, sign: int = 1) -> FqMatrix:
    row = dctx.unit(k)
    return -row if sign < 0 else row


def sigma_generators(dctx: DeformationContext) -> List[RVector]:
    """e_i + Σ_j u_ij e_{n-m+j} (i <= n-m) e e_ℓ + Σ_j v_ℓj e_{n-m+j} (ℓ >= n+1)."""
    mod, n, m = dctx.base, dctx.n, dctx.m
    gens: List[RVector] = []
    for i in range(1, n - m + 1):
        linear = {u_name(i, j): _scaled(dctx, mod.e(n - m + j)) for j in range(1, m + 1)}
        gens.append(RVector(dctx.unit(mod.e(i)), linear))
    for l in range(1, m + 1):
        linear = {v_name(l, j): _scaled(dctx, mod.e(n - m + j)) for j in range(1, m + 1)}
        gens.append(RVector(dctx.unit(mod.e(n + l)), linear))
    return gens


def sigma_bar_generators(dctx: DeformationContext) -> List[RVector]:
    """
    f_{N+1-j} - Σ_i u_ij f_{N+1-i} - Σ_ℓ v_ℓj f_{N+1-ℓ}, para j em [n-m+1, n].
    """
    mod, n, m = dctx.base, dctx.n, dctx.m
    N = n + m
    gens: List[RVector] = []
    for jp in range(1, m + 1):
        j = n - m + jp
        linear: Dict[str, FqMatrix] = {}
        for i in range(1, n - m + 1):
            linear[u_name(i, jp)] = _scaled(dctx, mod.f(N + 1 - i), -1)
        for l in range(1, m + 1):
            linear[v_name(l, jp)] = _scaled(dctx, mod.f(N + 1 - (n + l)), -1)
        gens.append(RVector(dctx.unit(mod.f(N + 1 - j)), linear))
    return gens


def sigma_bar_by_annihilator(dctx: DeformationContext, sigma: List[RVector]) -> List[RVector]:
    """
    Rederiva ω(Σ̄) como anulador de ω(Σ) dentro do span dos f.

    Cada gerador é f_{N+1-j} + δ com δ de primeira ordem e coeficientes nulos
    nas colunas f_[m+1,2m] (o anulador no ponto). As demais colunas
    (f_[1,m] ∪ f_[2m+1,N]) são pivôs do sistema {s₀, δ_g} = -[g]{s₁, f_{N+1-j}}.
    """
    mod, n, m = dctx.base, dctx.n, dctx.m
    N = n + m
    ctx = mod.ctx
    pivot_cols = mod.f_range(1, m) + mod.f_range(2 * m + 1, N)
    const_rows = FqMatrix.from_rows(ctx, [list(s.const.rows()[0]) for s in sigma])
    system = mod.pair(const_rows, mod.unit_rows(pivot_cols))

    derived: List[RVector] = []
    for jp in range(1, m + 1):
        j = n - m + jp
        g0 = RVector(dctx.unit(mod.f(N + 1 - j)))
        linear: Dict[str, FqMatrix] = {}
        for gen in dctx.ring.generators:
            rhs_values = []
            for s in sigma:
                s1 = RVector(FqMatrix.zeros(ctx, 1, mod.dim), {gen: s.linear[gen]} if gen in s.linear else {})
                rhs_values.append(-r_pairing(mod, s1, g0).coeff(gen))
            rhs = FqMatrix.from_rows(ctx, [[value] for value in rhs_values])
            solution = system.solve(rhs)
            ensure(solution is not None, "universal_deformation.annihilator_solvable", True, False, f"gen={gen}")
            row = FqMatrix.zeros(ctx, 1, mod.dim)
            for idx, col in enumerate(pivot_cols):
                row.re[0, col] = solution.re[idx, 0]
                row.im[0, col] = solution.im[idx, 0]
            if not row.is_zero():
                linear[gen] = row
        derived.append(RVector(g0.const, linear))
    return derived


@dataclass(frozen=True)
class UniversalDeformation:
    context: DeformationContext
    omega_sigma: Tuple[RVector, ...]
    omega_sigma_bar: Tuple[RVector, ...]

    def symbolic(self, vectors: Tuple[RVector, ...]) -> List[Dict[str, str]]:
        """{rótulo da base: coeficiente em R} para cada gerador."""
        mod = self.context.base
        return [{mod.label(k): str(c) for k, c in v.support().items()} for v in vectors]


def universal_deformation(n: int, m: int, ctx: FieldContext) -> UniversalDeformation:
    """
    Constrói ω(Σ) e ω(Σ̄) sobre R e confere contra o anulador.

    Raises:
        ConsistencyError: forma fechada e anulador divergem, ou falha de isotropia
    """
    dctx = deformation_context(n, m, ctx)
    sigma = sigma_generators(dctx)
    sigma_bar = sigma_bar_generators(dctx)

    derived = sigma_bar_by_annihilator(dctx, sigma)
    for jp, (closed, ann) in enumerate(zip(sigma_bar, derived), start=1):
        ensure(closed == ann, "universal_deformation.annihilator", ann.support(), closed.support(), f"j'={jp}")

    reduced = FqMatrix.from_rows(ctx, [list(v.const.rows()[0]) for v in sigma + sigma_bar])
    ensure(
        Subspace.span(reduced) == omega_subspace(dctx.base),
        "universal_deformation.reduction",
        "ω no ponto",
        "redução diferente",
    )
    ensure(_is_isotropic(dctx.base, sigma + sigma_bar), "universal_deformation.isotropic", True, False)
    logger.info(f"✅ Deformação universal ({n},{m}): {len(dctx.ring.generators)} geradores")
    return UniversalDeformation(context=dctx, omega_sigma=tuple(sigma), omega_sigma_bar=tuple(sigma_bar))


def _is_isotropic(mod: DieudonneModule, vectors: List[RVector]) -> bool:
    return all(r_pairing(mod, x, y).is_zero() for x in vectors for y in vectors)


def is_free_of_rank(mod: DieudonneModule, vectors: List[RVector], rank: int) -> bool:
    """Livre de posto `rank`: as reduções no ponto são linearmente independentes."""
    reduced = FqMatrix.from_rows(mod.ctx, [list(v.const.rows()[0]) for v in vectors])
    return len(vectors) == rank and reduced.rank() == rank
