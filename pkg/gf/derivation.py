"""
Polinômios em duas variáveis sobre F_p e campos vetoriais no plano afim.

Usado para o exemplo de folheação de altura 1: ξ = x∂/∂x + ∂/∂y satisfaz
ξ^(p) = x∂/∂x, logo a reta O·ξ não é fechada por p-potência, enquanto ∂/∂y
(com ξ^(p) = 0) é.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from core.errors import InvalidInputError
from core.logger import get_logger
from gf.field import is_prime

logger = get_logger(__name__)

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class Poly2V:
    """
    Polinômio Σ c·x^i·y^j sobre F_p com grau total limitado.

    Attributes:
        p: Característica
        bound: Grau total máximo permitido
        terms: Pares ((i, j), c) ordenados, c != 0
    """

    p: int
    bound: int
    terms: Tuple[Tuple[Monomial, int], ...] = ()

    @classmethod
    def build(cls, p: int, bound: int, coeffs: Mapping[Monomial, int]) -> "Poly2V":
        clean: Dict[Monomial, int] = {}
        for (i, j), c in coeffs.items():
            c %= p
            if not c:
                continue
            if i < 0 or j < 0:
                raise InvalidInputError(f"expoente negativo em x^{i} y^{j}")
            if i + j > bound:
                raise InvalidInputError(f"grau {i + j} excede o limite {bound}")
            clean[(i, j)] = c
        return cls(p, bound, tuple(sorted(clean.items())))

    @classmethod
    def monomial(cls, p: int, bound: int, i: int, j: int, c: int = 1) -> "Poly2V":
        return cls.build(p, bound, {(i, j): c})

    @classmethod
    def zero(cls, p: int, bound: int) -> "Poly2V":
        return cls(p, bound)

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _like(self, coeffs: Mapping[Monomial, int]) -> "Poly2V":
        return Poly2V.build(self.p, self.bound, coeffs)

    def __add__(self, other: "Poly2V") -> "Poly2V":
        out = self.as_dict()
        for mono, c in other.terms:
            out[mono] = out.get(mono, 0) + c
        return self._like(out)

    def __neg__(self) -> "Poly2V":
        return self._like({mono: -c for mono, c in self.terms})

    def __sub__(self, other: "Poly2V") -> "Poly2V":
        return self + (-other)

    def __mul__(self, other: "Poly2V") -> "Poly2V":
        out: Dict[Monomial, int] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                mono = (i1 + i2, j1 + j2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return self._like(out)

    def d_dx(self) -> "Poly2V":
        return self._like({(i - 1, j): i * c for (i, j), c in self.terms if i})

    def d_dy(self) -> "Poly2V":
        return self._like({(i, j - 1): j * c for (i, j), c in self.terms if j})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in self.terms)


@dataclass(frozen=True)
class VectorField2V:
    """ξ = fx·∂/∂x + fy·∂/∂y."""

    fx: Poly2V
    fy: Poly2V

    def apply(self, f: Poly2V) -> Poly2V:
        return self.fx * f.d_dx() + self.fy * f.d_dy()

    def iterate(self, f: Poly2V, times: int) -> Poly2V:
        for _ in range(times):
            f = self.apply(f)
        return f

    def compose_power(self) -> "VectorField2V":
        """
        ξ^(p), lido pela ação de ξ^p nas coordenadas x e y.

        Em característica p a p-ésima potência de uma derivação é derivação.
        """
        p, bound = self.fx.p, self.fx.bound
        x = Poly2V.monomial(p, bound, 1, 0)
        y = Poly2V.monomial(p, bound, 0, 1)
        return VectorField2V(self.iterate(x, p), self.iterate(y, p))

    def lie_bracket(self, other: "VectorField2V") -> "VectorField2V":
        """[ξ, η] = (ξ(η_x) - η(ξ_x))∂x + (ξ(η_y) - η(ξ_y))∂y."""
        return VectorField2V(
            self.apply(other.fx) - other.apply(self.fx),
            self.apply(other.fy) - other.apply(self.fy),
        )

    def wedge(self, other: "VectorField2V") -> Poly2V:
        return self.fx * other.fy - self.fy * other.fx

    def is_p_closed_line(self) -> bool:
        """O subfeixe saturado gerado por ξ é fechado por p-potência sse ξ ∧ ξ^(p) = 0."""
        return self.wedge(self.compose_power()).is_zero()

    def is_zero(self) -> bool:
        return self.fx.is_zero() and self.fy.is_zero()

    def __str__(self) -> str:
        return f"({self.fx})∂x + ({self.fy})∂y"


def example_field(p: int, bound: int) -> VectorField2V:
    """ξ = x∂/∂x + ∂/∂y."""
    return VectorField2V(Poly2V.monomial(p, bound, 1, 0), Poly2V.monomial(p, bound, 0, 0))


def euler_x(p: int, bound: int) -> VectorField2V:
    """x∂/∂x."""
    return VectorField2V(Poly2V.monomial(p, bound, 1, 0), Poly2V.zero(p, bound))


def d_dy_field(p: int, bound: int) -> VectorField2V:
    """∂/∂y."""
    return VectorField2V(Poly2V.zero(p, bound), Poly2V.monomial(p, bound, 0, 0))


@dataclass(frozen=True)
class MonomialCheck:
    monomial: Monomial
    lhs: str
    rhs: str
    passed: bool


@dataclass(frozen=True)
class DerivationCheck:
    """
    Resultado de p_power_of_derivation.

    Attributes:
        checks: Uma entrada por monômio x^a y^b com a+b <= degree_bound
        xi_p: ξ^(p) calculado pela ação em x e y
        example_p_closed: Veredito de fechamento para ξ = x∂x + ∂y
        d_dy_p_closed: Veredito de fechamento para ∂y
    """

    p: int
    degree_bound: int
    checks: Tuple[MonomialCheck, ...]
    xi_p: str
    example_p_closed: bool
    d_dy_p_closed: bool

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def p_power_of_derivation(p: int, degree_bound: int) -> DerivationCheck:
    """
    Compara ξ^p com x∂/∂x em todos os monômios até degree_bound.

    Args:
        p: Primo ímpar
        degree_bound: Grau total máximo (>= p)

    Returns:
        DerivationCheck com aprovação por monômio
    """
    if not is_prime(p) or p == 2:
        raise InvalidInputError(f"p precisa ser primo ímpar, recebido {p}")
    if degree_bound < p:
        raise InvalidInputError(f"degree_bound={degree_bound} precisa ser >= p={p}")

    xi = example_field(p, degree_bound)
    target = euler_x(p, degree_bound)
    checks: List[MonomialCheck] = []
    for total in range(degree_bound + 1):
        for a in range(total + 1):
            mono = Poly2V.monomial(p, degree_bound, a, total - a)
            lhs = xi.iterate(mono, p)
            rhs = target.apply(mono)
            checks.append(MonomialCheck((a, total - a), str(lhs), str(rhs), lhs == rhs))

    result = DerivationCheck(
        p=p,
        degree_bound=degree_bound,
        checks=tuple(checks),
        xi_p=str(xi.compose_power()),
        example_p_closed=xi.is_p_closed_line(),
        d_dy_p_closed=d_dy_field(p, degree_bound).is_p_closed_line(),
    )
    if result.passed:
        logger.info(f"✅ ξ^(p) = x∂x verificado em {len(checks)} monômios (p={p})")
    else:
        logger.warning(f"❌ ξ^(p) != x∂x em {sum(not c.passed for c in checks)} monômios (p={p})")
    return result
