"""
Módulo de Dieudonné padrão D₀ num ponto de S_fol.

Base graduada e_1..e_N (tipo Σ) e f_1..f_N (tipo Σ̄), N = n+m. Coordenadas:
e_i ocupa a posição i-1 e f_j a posição N+j-1. As matrizes seguem a
convenção de linhas: a linha k é a imagem do k-ésimo vetor da base.

Tabelas (sinais transcritos literalmente):

    F(e_i^(p)) = -f_{i-n+m}   para i em [n-m+1, n], 0 caso contrário
    F(f_j^(p)) = -e_j         para j <= m
                 0            para j em [m+1, 2m]
                 -e_{j-m}     para j > 2m
    V(e_i)     = f_{i-n+m}^(p) para i em [n+1, n+m], 0 caso contrário
    V(f_j)     = 0            para j <= m
                 e_{j-m}^(p)  para j em [m+1, n]
                 e_j^(p)      para j em [n+1, n+m]
    {e_i, f_{N+1-i}} = 1, forma alternada
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal

from core.errors import InvalidInputError
from core.logger import get_logger
from gf.field import FieldContext
from gf.matrix import FqMatrix

logger = get_logger(__name__)

MapName = Literal["F", "V"]


@dataclass(frozen=True)
class DieudonneModule:
    """
    D₀ com F, V e a forma {,}_φ.

    Attributes:
        n, m: Assinatura, 1 <= m < n
        ctx: Corpo F_{p^2}
        F_matrix: F: D₀^(p) → D₀ (linhas = imagens)
        V_matrix: V: D₀ → D₀^(p)
        pairing_matrix: Matriz de Gram de {,}_φ
    """

    n: int
    m: int
    ctx: FieldContext
    F_matrix: FqMatrix
    V_matrix: FqMatrix
    pairing_matrix: FqMatrix

    @property
    def N(self) -> int:
        return self.n + self.m

    @property
    def dim(self) -> int:
        return 2 * self.N

    def e(self, i: int) -> int:
        """Índice 0-based de e_i."""
        if not 1 <= i <= self.N:
            raise InvalidInputError(f"e_{i} fora de [1, {self.N}]")
        return i - 1

    def f(self, j: int) -> int:
        """Índice 0-based de f_j."""
        if not 1 <= j <= self.N:
            raise InvalidInputError(f"f_{j} fora de [1, {self.N}]")
        return self.N + j - 1

    def label(self, k: int) -> str:
        return f"e{k + 1}" if k < self.N else f"f{k - self.N + 1}"

    def is_sigma(self, k: int) -> bool:
        return k < self.N

    def e_range(self, lo: int, hi: int) -> List[int]:
        """Índices de e_[lo, hi] (vazio se hi < lo)."""
        return [self.e(i) for i in range(max(lo, 1), min(hi, self.N) + 1)]

    def f_range(self, lo: int, hi: int) -> List[int]:
        return [self.f(j) for j in range(max(lo, 1), min(hi, self.N) + 1)]

    def matrix(self, which: MapName) -> FqMatrix:
        if which == "F":
            return self.F_matrix
        if which == "V":
            return self.V_matrix
        raise InvalidInputError(f"mapa desconhecido: {which!r}")

    def pair(self, x: FqMatrix, y: FqMatrix) -> FqMatrix:
        """Matriz {x_i, y_j} para linhas de x e y."""
        return x @ self.pairing_matrix @ y.transpose()

    def unit_rows(self, indices: Iterable[int]) -> FqMatrix:
        return FqMatrix.unit_rows(self.ctx, indices, self.dim)

    def tables(self) -> Dict[str, Dict[str, str]]:
        """Tabelas de F e V por vetor da base, ex. {"F": {"e3": "-f1", ...}}."""
        out: Dict[str, Dict[str, str]] = {}
        for name in ("F", "V"):
            mat = self.matrix(name)
            entries: Dict[str, str] = {}
            for k in range(self.dim):
                terms = []
                for col in range(self.dim):
                    coeff = mat.entry(k, col)
                    if not coeff:
                        continue
                    if coeff == self.ctx.one():
                        terms.append(self.label(col))
                    elif coeff == -self.ctx.one():
                        terms.append("-" + self.label(col))
                    else:
                        terms.append(f"({coeff}){self.label(col)}")
                entries[self.label(k)] = " + ".join(terms) if terms else "0"
            out[name] = entries
        return out


def _set(mat: FqMatrix, row: int, col: int, value: int) -> None:
    mat.re[row, col] = value % mat.ctx.p


def standard_fol_module(n: int, m: int, ctx: FieldContext) -> DieudonneModule:
    """
    Constrói D₀ a partir das tabelas de F e V.

    Raises:
        InvalidInputError: se não valer 1 <= m < n
    """
    if not 1 <= m < n:
        raise InvalidInputError(f"assinatura inválida (n={n}, m={m}): exige 1 <= m < n")
    N = n + m
    dim = 2 * N

    def e(i: int) -> int:
        return i - 1

    def f(j: int) -> int:
        return N + j - 1

    F = FqMatrix.zeros(ctx, dim, dim)
    V = FqMatrix.zeros(ctx, dim, dim)
    pairing = FqMatrix.zeros(ctx, dim, dim)

    for i in range(n - m + 1, n + 1):
        _set(F, e(i), f(i - n + m), -1)
    for j in range(1, N + 1):
        if j <= m:
            _set(F, f(j), e(j), -1)
        elif j > 2 * m:
            _set(F, f(j), e(j - m), -1)

    for i in range(n + 1, N + 1):
        _set(V, e(i), f(i - n + m), 1)
    for j in range(m + 1, N + 1):
        if j <= n:
            _set(V, f(j), e(j - m), 1)
        else:
            _set(V, f(j), e(j), 1)

    for i in range(1, N + 1):
        _set(pairing, e(i), f(N + 1 - i), 1)
        _set(pairing, f(N + 1 - i), e(i), -1)

    logger.debug(f"Módulo padrão construído (n={n}, m={m}, p={ctx.p})")
    return DieudonneModule(n=n, m=m, ctx=ctx, F_matrix=F, V_matrix=V, pairing_matrix=pairing)


def omega_indices(mod: DieudonneModule) -> List[int]:
    """ω = Span{e_[1,n-m], e_[n+1,n+m], f_[m+1,2m]}."""
    n, m = mod.n, mod.m
    return mod.e_range(1, n - m) + mod.e_range(n + 1, n + m) + mod.f_range(m + 1, 2 * m)


def lattice_indices(mod: DieudonneModule, a: int, b: int) -> List[int]:
    """D(a,b) = Span{e_[1,a], f_[1,b]}."""
    return mod.e_range(1, a) + mod.f_range(1, b)
