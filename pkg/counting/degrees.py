"""
Graus dos morfismos de cobertura: ρ, ρ′, π_et, θ e θ′.

Só os graus entram aqui (inteiros exatos). deg(ρ) = p^{m²} é conferido
contra o posto da folheação calculado pelo sistema tangente.
"""

from dataclasses import dataclass
from typing import Dict, Optional

from core.errors import InvalidInputError, ensure
from core.logger import get_logger
from deformation.tangent import tangent_system
from gf.field import FieldContext

logger = get_logger(__name__)


@dataclass(frozen=True)
class DegreeExponents:
    """Expoentes de p de cada grau."""

    rho: int
    rho_prime: int
    pi_et: int
    theta: int
    theta_prime: int


@dataclass(frozen=True)
class DegreeTable:
    """
    Attributes:
        p, n, m: Instância
        deg_rho: p^{m²}
        deg_rho_prime: p^{(n-m)m}
        deg_pi_et: p^{(2n-m)m}
        deg_theta: p^{m²}
        deg_theta_prime: p^{(2n-m)m}
        foliation_rank: m², o expoente de deg(ρ)
    """

    p: int
    n: int
    m: int
    deg_rho: int
    deg_rho_prime: int
    deg_pi_et: int
    deg_theta: int
    deg_theta_prime: int
    foliation_rank: int

    def as_dict(self) -> Dict[str, int]:
        return {
            "deg_rho": self.deg_rho,
            "deg_rho_prime": self.deg_rho_prime,
            "deg_pi_et": self.deg_pi_et,
            "deg_theta": self.deg_theta,
            "deg_theta_prime": self.deg_theta_prime,
        }


def degree_exponents(n: int, m: int) -> DegreeExponents:
    if not 1 <= m < n:
        raise InvalidInputError(f"assinatura inválida (n={n}, m={m})")
    return DegreeExponents(
        rho=m * m,
        rho_prime=(n - m) * m,
        pi_et=(2 * n - m) * m,
        theta=m * m,
        theta_prime=(2 * n - m) * m,
    )


def check_exponent_identities(max_n: int = 20) -> int:
    """
    Confere as identidades de expoentes para todo 1 <= m < n <= max_n.

    Returns:
        Número de pares (n, m) conferidos
    """
    checked = 0
    for n in range(2, max_n + 1):
        for m in range(1, n):
            e = degree_exponents(n, m)
            ensure(e.rho + e.rho_prime == n * m, "degree_exponents.rho_rho_prime", n * m, e.rho + e.rho_prime, f"({n},{m})")
            ensure(e.rho_prime + n * m == e.pi_et, "degree_exponents.pi_et", e.pi_et, e.rho_prime + n * m, f"({n},{m})")
            ensure(e.theta + e.theta_prime == 2 * n * m, "degree_exponents.theta", 2 * n * m, e.theta + e.theta_prime, f"({n},{m})")
            gamma = 2 * (n - m) * m + m * (m - 1) + m
            ensure(gamma == 2 * n * m - m * m, "degree_exponents.gamma", 2 * n * m - m * m, gamma, f"({n},{m})")
            checked += 1
    return checked


def degree_table(p: int, n: int, m: int, cross_check: bool = True, ctx: Optional[FieldContext] = None) -> DegreeTable:
    """
    Preenche os cinco graus e confere as identidades entre eles.

    Args:
        p: Primo ímpar
        n, m: Assinatura
        cross_check: Recalcula o posto da folheação pelo sistema tangente

    Raises:
        ConsistencyError: alguma identidade falhou
    """
    ctx = ctx or FieldContext.for_prime(p)
    e = degree_exponents(n, m)
    table = DegreeTable(
        p=p,
        n=n,
        m=m,
        deg_rho=p**e.rho,
        deg_rho_prime=p**e.rho_prime,
        deg_pi_et=p**e.pi_et,
        deg_theta=p**e.theta,
        deg_theta_prime=p**e.theta_prime,
        foliation_rank=m * m,
    )

    ensure(table.deg_rho * table.deg_rho_prime == p ** (n * m), "degree_table.rho_rho_prime", p ** (n * m), table.deg_rho * table.deg_rho_prime)
    ensure(table.deg_pi_et == table.deg_theta_prime, "degree_table.pi_et_theta_prime", table.deg_theta_prime, table.deg_pi_et)
    ensure(table.deg_theta == table.deg_rho, "degree_table.theta_rho", table.deg_rho, table.deg_theta)
    ensure(table.deg_theta * table.deg_theta_prime == p ** (2 * n * m), "degree_table.theta_theta_prime", p ** (2 * n * m), table.deg_theta * table.deg_theta_prime)
    ensure(table.deg_pi_et == table.deg_rho_prime * p ** (n * m), "degree_table.pi_et_rho_prime", table.deg_rho_prime * p ** (n * m), table.deg_pi_et)
    ensure(table.deg_rho == p**table.foliation_rank, "degree_table.rank", p**table.foliation_rank, table.deg_rho)

    if cross_check:
        dims = tangent_system(n, m, ctx)
        ensure(dims.foliation_dim == table.foliation_rank, "degree_table.foliation_dim", table.foliation_rank, dims.foliation_dim)
    logger.info(f"✅ Tabela de graus ({p},{n},{m}): deg ρ = {table.deg_rho}, deg π_et = {table.deg_pi_et}")
    return table
