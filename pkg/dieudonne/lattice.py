"""
Cálculo de reticulado D(a,b) = Span{e_[1,a], f_[1,b]}.

F(D(a,b)^(p)) = D(a⁻, b⁻) e V⁻¹(D(a,b)^(p)) = D(a⁺, b⁺), com

    a⁻ = b (b <= m) | m (m < b <= 2m) | b - m (b > 2m)
    b⁻ = 0 (a <= n-m) | a - n + m (n-m < a <= n) | m (a > n)
    a⁺ = n (b <= m) | b + n - m (m < b <= 2m) | n + m (b > 2m)
    b⁺ = a + m (a <= n-m) | n (n-m < a <= n) | a (a > n)
"""

from dataclasses import dataclass
from typing import List, Literal, Tuple

from core.errors import InvalidInputError, ensure

StepName = Literal["F", "V^-1"]


@dataclass(frozen=True, order=True)
class LatticePair:
    """Par (a, b) que designa D(a, b)."""

    a: int
    b: int

    def check(self, n: int, m: int) -> "LatticePair":
        N = n + m
        if not (0 <= self.a <= N and 0 <= self.b <= N):
            raise InvalidInputError(f"LatticePair {self} fora de [0, {N}]²")
        return self

    def __str__(self) -> str:
        return f"D({self.a},{self.b})"


def _f_step(n: int, m: int, a: int, b: int) -> Tuple[int, int]:
    if b <= m:
        a_minus = b
    elif b <= 2 * m:
        a_minus = m
    else:
        a_minus = b - m
    if a <= n - m:
        b_minus = 0
    elif a <= n:
        b_minus = a - n + m
    else:
        b_minus = m
    return a_minus, b_minus


def _v_inverse_step(n: int, m: int, a: int, b: int) -> Tuple[int, int]:
    if b <= m:
        a_plus = n
    elif b <= 2 * m:
        a_plus = b + n - m
    else:
        a_plus = n + m
    if a <= n - m:
        b_plus = a + m
    elif a <= n:
        b_plus = n
    else:
        b_plus = a
    return a_plus, b_plus


def lattice_step(n: int, m: int, pair: LatticePair, which: StepName) -> LatticePair:
    """
    Um passo F ou V⁻¹ no reticulado.

    Examples:
        >>> lattice_step(4, 2, LatticePair(4, 2), "F")
        LatticePair(a=2, b=2)
        >>> lattice_step(4, 2, LatticePair(0, 0), "V^-1")
        LatticePair(a=4, b=2)
    """
    if not 1 <= m < n:
        raise InvalidInputError(f"assinatura inválida (n={n}, m={m})")
    pair.check(n, m)
    if which == "F":
        return LatticePair(*_f_step(n, m, pair.a, pair.b))
    if which == "V^-1":
        return LatticePair(*_v_inverse_step(n, m, pair.a, pair.b))
    raise InvalidInputError(f"passo desconhecido: {which!r}")


def r_of(n: int, m: int) -> int:
    """
    Único r >= 1 com r/(r+1) < m/n <= (r+1)/(r+2).

    Raises:
        InvalidInputError: 2m <= n (r indefinido)
    """
    if not 1 <= m < n:
        raise InvalidInputError(f"assinatura inválida (n={n}, m={m})")
    if 2 * m <= n:
        raise InvalidInputError(f"r indefinido para 2m <= n (n={n}, m={m})")
    found = [r for r in range(1, n + 1) if r * n < m * (r + 1) and m * (r + 2) <= n * (r + 1)]
    ensure(len(found) == 1, "r_of.unique", 1, found, f"(n,m)=({n},{m})")
    return found[0]


def word_steps(r: int) -> List[StepName]:
    """Passos da palavra V^{-2r} F^{2r+1} V^{-1}, na ordem de aplicação."""
    return ["V^-1"] + ["F"] * (2 * r + 1) + ["V^-1"] * (2 * r)


def expected_after_f(n: int, m: int, k: int) -> LatticePair:
    """F^k V⁻¹(0): k = 2i ou k = 2i+1."""
    i, odd = divmod(k, 2)
    if odd:
        v = (i + 1) * m - i * n
        return LatticePair(v, v)
    return LatticePair(i * m - (i - 1) * n, (i + 1) * m - i * n)


def expected_after_v_inverse(n: int, m: int, r: int, k: int) -> LatticePair:
    """V^{-k} F^{2r+1} V⁻¹(0): k = 2j-1 ou k = 2j."""
    j = (k + 1) // 2
    if k % 2:
        return LatticePair(j * n - (j - 1) * m, (r + 3 - j) * m - (r + 1 - j) * n)
    return LatticePair((r + 2 - j) * m - (r - j) * n, j * n - (j - 1) * m)
