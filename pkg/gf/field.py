"""
Aritmética exata em F_p e F_{p^2} = F_p[t]/(t^2 - c).

O não-resíduo c é o menor inteiro em [2, p-1] com c^((p-1)/2) ≡ -1 (mod p),
o que torna a serialização "a+b*t" reprodutível. O Frobenius σ(x) = x^p
age como a + b·t ↦ a - b·t, porque t^p = c^((p-1)/2)·t = -t.
"""

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from core.errors import InvalidInputError


def is_prime(p: int) -> bool:
    """Teste de primalidade por divisão (p pequeno)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldContext:
    """
    Contexto do corpo F_{p^2}.

    Attributes:
        p: Primo ímpar
        c: Não-resíduo quadrático mod p (t^2 = c)
    """

    p: int
    c: int

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise InvalidInputError(f"p precisa ser primo ímpar, recebido {self.p}")
        if not 0 < self.c < self.p or pow(self.c, (self.p - 1) // 2, self.p) != self.p - 1:
            raise InvalidInputError(f"c={self.c} não é não-resíduo quadrático mod {self.p}")

    @classmethod
    def for_prime(cls, p: int) -> "FieldContext":
        """
        Constrói o contexto canônico para p.

        Examples:
            >>> FieldContext.for_prime(3).c
            2
            >>> FieldContext.for_prime(7).c
            3
        """
        if not is_prime(p) or p == 2:
            raise InvalidInputError(f"p precisa ser primo ímpar, recebido {p}")
        for c in range(2, p):
            if pow(c, (p - 1) // 2, p) == p - 1:
                return cls(p, c)
        raise InvalidInputError(f"nenhum não-resíduo encontrado para p={p}")

    @property
    def q(self) -> int:
        """Cardinalidade p^2."""
        return self.p * self.p

    def elt(self, a: int, b: int = 0) -> "FqElt":
        return FqElt(a % self.p, b % self.p, self)

    def zero(self) -> "FqElt":
        return FqElt(0, 0, self)

    def one(self) -> "FqElt":
        return FqElt(1, 0, self)

    def t(self) -> "FqElt":
        return FqElt(0, 1, self)

    def elements(self) -> Iterator["FqElt"]:
        """Todos os p^2 elementos, em ordem (a, b) lexicográfica."""
        for a, b in itertools.product(range(self.p), repeat=2):
            yield FqElt(a, b, self)

    def prime_field(self) -> Iterator["FqElt"]:
        for a in range(self.p):
            yield FqElt(a, 0, self)

    def parse(self, text: str) -> "FqElt":
        """Inverso de str(FqElt): aceita 'a+b*t'."""
        match = _FQ_PATTERN.fullmatch(text.replace(" ", ""))
        if not match:
            raise InvalidInputError(f"elemento mal formado: {text!r}")
        return self.elt(int(match.group(1)), int(match.group(2)))


_FQ_PATTERN = re.compile(r"(-?\d+)\+(-?\d+)\*t")


@dataclass(frozen=True)
class FqElt:
    """
    Elemento a + b·t de F_{p^2}.

    Attributes:
        a: Parte racional, 0 <= a < p
        b: Coeficiente de t, 0 <= b < p
        ctx: Contexto do corpo
    """

    a: int
    b: int
    ctx: FieldContext

    def __post_init__(self) -> None:
        if not (0 <= self.a < self.ctx.p and 0 <= self.b < self.ctx.p):
            raise InvalidInputError(f"coordenadas fora de [0, {self.ctx.p}): ({self.a}, {self.b})")

    def _coerce(self, other: "FqElt | int") -> "FqElt":
        if isinstance(other, int):
            return self.ctx.elt(other)
        if other.ctx != self.ctx:
            raise InvalidInputError("elementos de corpos diferentes")
        return other

    def __add__(self, other: "FqElt | int") -> "FqElt":
        o = self._coerce(other)
        return self.ctx.elt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: "FqElt | int") -> "FqElt":
        o = self._coerce(other)
        return self.ctx.elt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: int) -> "FqElt":
        return self._coerce(other) - self

    def __neg__(self) -> "FqElt":
        return self.ctx.elt(-self.a, -self.b)

    def __mul__(self, other: "FqElt | int") -> "FqElt":
        o = self._coerce(other)
        c = self.ctx.c
        return self.ctx.elt(self.a * o.a + c * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: "FqElt | int") -> "FqElt":
        return self * self._coerce(other).inv()

    def __pow__(self, exponent: int) -> "FqElt":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result, base = self.ctx.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def is_zero(self) -> bool:
        return not self

    def frob(self) -> "FqElt":
        """σ(x) = x^p."""
        return self.ctx.elt(self.a, -self.b)

    def trace(self) -> int:
        """x + x^p ∈ F_p."""
        return (2 * self.a) % self.ctx.p

    def norm(self) -> int:
        """x · x^p ∈ F_p."""
        return (self.a * self.a - self.ctx.c * self.b * self.b) % self.ctx.p

    def inv(self) -> "FqElt":
        if not self:
            raise ZeroDivisionError("inverso de 0 em F_{p^2}")
        n_inv = pow(self.norm(), -1, self.ctx.p)
        conj = self.frob()
        return self.ctx.elt(conj.a * n_inv, conj.b * n_inv)

    def in_prime_field(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"{self.a}+{self.b}*t"

    def __repr__(self) -> str:
        return f"FqElt({self}, p={self.ctx.p})"


class FqSuite(NamedTuple):
    """Operações de F_{p^2} ligadas a um contexto."""

    ctx: FieldContext
    add: Callable[[FqElt, FqElt], FqElt]
    mul: Callable[[FqElt, FqElt], FqElt]
    neg: Callable[[FqElt], FqElt]
    inv: Callable[[FqElt], FqElt]
    frob: Callable[[FqElt], FqElt]
    conj_trace: Callable[[FqElt], FqElt]
    conj_norm: Callable[[FqElt], FqElt]


def fq_ops(ctx: FieldContext) -> FqSuite:
    """
    Suíte aritmética de F_{p^2}.

    trace e norm devolvem elementos do subcorpo primo (b = 0).

    Examples:
        >>> ops = fq_ops(FieldContext.for_prime(3))
        >>> str(ops.frob(ops.ctx.t()))
        '0+2*t'
    """
    return FqSuite(
        ctx=ctx,
        add=lambda x, y: x + y,
        mul=lambda x, y: x * y,
        neg=lambda x: -x,
        inv=lambda x: x.inv(),
        frob=lambda x: x.frob(),
        conj_trace=lambda x: ctx.elt(x.trace()),
        conj_norm=lambda x: ctx.elt(x.norm()),
    )
