"""
Schemas estruturados (Pydantic) dos relatórios JSON da CLI.

Cada relatório tem:
- Campo "schema" fixo em "eo-folkit/1"
- Tipos estritos (nada de coerção silenciosa)
- Descrições por campo

Uso: Report.model_validate_json(report.model_dump_json()) == report
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "eo-folkit/1"


class Report(BaseModel):
    """Base comum: configuração estrita e versão do schema."""
    model_config = ConfigDict(strict=True, validate_by_name=True, validate_by_alias=True, serialize_by_alias=True)

    schema_version: Literal["eo-folkit/1"] = Field(
        SCHEMA_VERSION,
        alias="schema",
        description="Versão do formato dos relatórios"
    )


# === WEYL ===

class StratumEntry(BaseModel):
    """Um estrato no relatório do poset"""
    model_config = ConfigDict(strict=True)

    w: str = Field(..., description="Shuffle em notação de uma linha")
    length: int = Field(..., ge=0, description="Dimensão l(w)")
    a_sigma: int = Field(..., ge=0, description="Parte Σ do a-número")
    in_s_sharp: bool
    is_fol: bool
    fiber_dim: int = Field(..., ge=0, description="(n-m)(a_Σ - n + m)")


class DiagramEntry(BaseModel):
    """Comparação com o diagrama de (4,2)"""
    model_config = ConfigDict(strict=True)

    closure_equal: bool = Field(..., description="Fechos transitivos coincidem")
    covers_equal: bool = Field(..., description="Coberturas coincidem com as 21 arestas desenhadas")
    missing_covers: List[List[str]] = Field(default_factory=list)
    extra_covers: List[List[str]] = Field(default_factory=list)


class StrataReport(Report):
    """Subcomando strata: poset completo"""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    strata: List[StratumEntry]
    covers: List[List[str]] = Field(..., description="Pares [maior, menor]")
    maximal: List[str]
    minimal: List[str]
    s_sharp_minimal: List[str] = Field(default_factory=list, description="Membros ⪯-minimais de S_♯")
    diagram: Optional[DiagramEntry] = Field(None, description="Só para (n,m) = (4,2)")


class StratumReport(Report):
    """Subcomando stratum: um único w"""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    w: str
    length: int = Field(..., ge=0)
    a_sigma: int = Field(..., ge=0)
    in_s_sharp: bool
    is_fol: bool
    is_ordinary: bool
    is_core: bool
    fiber_dim: int = Field(..., ge=0)
    special: Dict[str, str] = Field(default_factory=dict, description="identity, longest, w_fol, w_0J")


# === DIEUDONNÉ ===

class DieudonneReport(Report):
    """Subcomando dieudonne: tabelas, núcleos e imagens"""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    p: int = Field(..., ge=3)
    c: int = Field(..., ge=2, description="Não-resíduo: t^2 = c")
    tables: Dict[str, Dict[str, str]] = Field(..., description="Imagem de cada vetor da base, ex. {'F': {'e3': '-f1'}}")
    spans: Dict[str, List[str]] = Field(..., description="Núcleos e imagens como rótulos da base")
    canonical_M: List[str]
    vq_image: List[str]
    hasse_matrix: List[List[str]]
    hasse_zero: bool
    checks: Dict[str, bool] = Field(..., description="Exatidão, composições, forma, P₀")
    warnings: List[str] = Field(default_factory=list)


class WordStepEntry(BaseModel):
    model_config = ConfigDict(strict=True)

    word: str
    a: int
    b: int
    expected_a: int
    expected_b: int


class CanonicalWordReport(Report):
    """Subcomando canfilt: traço da palavra V^{-2r}F^{2r+1}V^{-1}(0)"""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    p: int = Field(..., ge=3)
    r: int = Field(..., ge=1)
    result: List[int] = Field(..., description="[a, b] final")
    expected: List[int] = Field(..., description="[2m, rn-(r-1)m]")
    matrix_result: List[str] = Field(..., description="Base coordenada do resultado matricial")
    trace: List[WordStepEntry]


# === DEFORMAÇÃO ===

class TangentEntry(BaseModel):
    model_config = ConfigDict(strict=True)

    total_dim: int = Field(..., ge=0)
    foliation_dim: int = Field(..., ge=0)
    fiber_dim: int = Field(..., ge=0)


class DeformationReport(Report):
    """Subcomando deform: geradores, resíduos, ideal e dimensões tangentes"""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    p: int = Field(..., ge=3)
    omega_sigma: List[Dict[str, str]]
    omega_sigma_bar: List[Dict[str, str]]
    target: List[str] = Field(..., description="Somando livre V(Q) ou M^(p)")
    residues: Dict[str, Dict[str, Dict[str, str]]] = Field(..., description="{j': {gerador: {rótulo: coeficiente}}}")
    ideal: List[str]
    ideal_indexed: List[str]
    tangent: TangentEntry
    foliation_generators: List[str]


# === CONTAGEM ===

class CountReport(Report):
    """Subcomando count"""

    p: int = Field(..., ge=3)
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    closed_form: int = Field(..., ge=1, description="p^{2nm-m²}")
    exponents: List[int] = Field(..., description="[2(n-m)m, m(m-1), m]")
    brute_force: Optional[int] = Field(None, description="Ausente quando o guard não permite")
    fast: Optional[int] = None
    oracle: Optional[int] = Field(None, description="Ausente quando o oracle_guard não permite")
    degrees: Dict[str, int]
    skipped: List[str] = Field(default_factory=list, description="Contagens puladas por limite")
    elapsed: float = Field(..., ge=0.0)


# === DERIVAÇÃO ===

class MonomialEntry(BaseModel):
    model_config = ConfigDict(strict=True)

    a: int = Field(..., ge=0, description="Grau em x")
    b: int = Field(..., ge=0, description="Grau em y")
    lhs: str = Field(..., description="ξ^p(x^a y^b)")
    rhs: str = Field(..., description="x∂x(x^a y^b)")
    passed: bool


class DerivationReport(Report):
    """Subcomando derivation-demo"""

    p: int = Field(..., ge=3)
    degree_bound: int = Field(..., ge=3)
    xi_p: str
    example_p_closed: bool
    d_dy_p_closed: bool
    monomials: List[MonomialEntry]
    passed: bool


# === VERIFY / FALHA ===

class SuiteEntry(BaseModel):
    model_config = ConfigDict(strict=True)

    name: str
    is_valid: bool
    checked: int = Field(..., ge=0, description="Instâncias verificadas")
    warnings: List[str] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list, description="Instâncias puladas por limite configurado")


class VerifyReport(Report):
    """Subcomando verify: resumo determinístico de todas as suítes"""

    max_nm: int = Field(..., ge=2)
    p: int = Field(..., ge=3)
    suites: List[SuiteEntry]
    passed: bool


class FailureReport(Report):
    """Diff estruturado emitido com código de saída 1"""

    check: str
    expected: Any = None
    actual: Any = None
    detail: Optional[str] = None
    error: str
