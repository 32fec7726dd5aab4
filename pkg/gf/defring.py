"""
Anel de deformação de primeira ordem R = k ⊕ (parte linear nilpotente).

Os geradores ε_g satisfazem ε_g·ε_h = 0 para todo par (g, h), então um
elemento é uma constante mais uma combinação linear dos geradores.
O Frobenius de R fatora por R ↠ k: os nilpotentes morrem (p >= 3).
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Mapping, NamedTuple, Tuple

from core.errors import InvalidInputError
from gf.field import FieldContext, FqElt


@dataclass(frozen=True)
class DefRingElt:
    """
    Elemento const + Σ coef·ε_g.

    Attributes:
        const: Parte constante em F_{p^2}
        linear: Pares (gerador, coeficiente) ordenados por nome, sem coeficientes nulos
    """

    const: FqElt
    linear: Tuple[Tuple[str, FqElt], ...] = ()

    @classmethod
    def build(cls, const: FqElt, linear: Mapping[str, FqElt] | None = None) -> "DefRingElt":
        """Normaliza o dicionário linear (remove zeros e ordena)."""
        items = tuple(sorted((g, c) for g, c in (linear or {}).items() if c))
        return cls(const, items)

    @property
    def ctx(self) -> FieldContext:
        return self.const.ctx

    def coeff(self, generator: str) -> FqElt:
        return dict(self.linear).get(generator, self.ctx.zero())

    def generators(self) -> Tuple[str, ...]:
        return tuple(g for g, _ in self.linear)

    def reduce(self) -> FqElt:
        """Redução módulo o ideal maximal (u = v = 0)."""
        return self.const

    def is_zero(self) -> bool:
        return not self.const and not self.linear

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "DefRingElt") -> "DefRingElt":
        merged: Dict[str, FqElt] = dict(self.linear)
        for g, c in other.linear:
            merged[g] = merged[g] + c if g in merged else c
        return DefRingElt.build(self.const + other.const, merged)

    def __neg__(self) -> "DefRingElt":
        return DefRingElt.build(-self.const, {g: -c for g, c in self.linear})

    def __sub__(self, other: "DefRingElt") -> "DefRingElt":
        return self + (-other)

    def __mul__(self, other: "DefRingElt | FqElt") -> "DefRingElt":
        if isinstance(other, FqElt):
            return DefRingElt.build(self.const * other, {g: c * other for g, c in self.linear})
        # (a + x)(b + y) = ab + a·y + b·x, pois x·y = 0
        merged: Dict[str, FqElt] = {g: c * other.const for g, c in self.linear}
        for g, c in other.linear:
            term = self.const * c
            merged[g] = merged[g] + term if g in merged else term
        return DefRingElt.build(self.const * other.const, merged)

    __rmul__ = __mul__

    def frob(self) -> "DefRingElt":
        """Frobenius de R: const^p, parte linear descartada."""
        return DefRingElt(self.const.frob())

    def __str__(self) -> str:
        parts = [str(self.const)]
        parts.extend(f"({c})*{g}" for g, c in self.linear)
        return " + ".join(parts)


class DefRingSuite(NamedTuple):
    """Operações de R ligadas a um contexto e a uma lista de geradores."""

    ctx: FieldContext
    generators: Tuple[str, ...]
    const: Callable[[FqElt | int], DefRingElt]
    gen: Callable[[str], DefRingElt]
    add: Callable[[DefRingElt, DefRingElt], DefRingElt]
    mul: Callable[[DefRingElt, DefRingElt], DefRingElt]
    frob: Callable[[DefRingElt], DefRingElt]


def defring_ops(ctx: FieldContext, generators: Iterable[str]) -> DefRingSuite:
    """
    Suíte aritmética de R = k[ε_g]/(ε_g ε_h).

    Examples:
        >>> R = defring_ops(FieldContext.for_prime(3), ["u", "v"])
        >>> x = R.mul(R.add(R.const(1), R.gen("u")), R.add(R.const(1), R.gen("v")))
        >>> str(x)
        '1+0*t + (1+0*t)*u + (1+0*t)*v'
    """
    names = tuple(generators)
    if len(set(names)) != len(names):
        raise InvalidInputError(f"geradores repetidos: {names}")
    known = frozenset(names)

    def const(value: FqElt | int) -> DefRingElt:
        return DefRingElt(value if isinstance(value, FqElt) else ctx.elt(value))

    def gen(name: str) -> DefRingElt:
        if name not in known:
            raise InvalidInputError(f"gerador desconhecido: {name!r}")
        return DefRingElt.build(ctx.zero(), {name: ctx.one()})

    return DefRingSuite(
        ctx=ctx,
        generators=names,
        const=const,
        gen=gen,
        add=lambda x, y: x + y,
        mul=lambda x, y: x * y,
        frob=lambda x: x.frob(),
    )
