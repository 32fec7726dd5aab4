"""
(n,m)-shuffles e estatísticas fechadas dos estratos EO.

Um shuffle w satisfaz w⁻¹(1) < … < w⁻¹(n) e w⁻¹(n+1) < … < w⁻¹(n+m): em
notação de uma linha os valores 1..n e n+1..n+m aparecem em ordem.
"""

import itertools
from dataclasses import dataclass
from math import comb
from typing import List, NamedTuple, Optional

from core.config import Limits, load_limits
from core.errors import BoundExceededError, InvalidInputError, ensure
from core.logger import get_logger
from weyl.permutation import Permutation

logger = get_logger(__name__)


def _check_signature(n: int, m: int, allow_zero: bool = True) -> None:
    low = 0 if allow_zero else 1
    if n < 1 or not low <= m < n:
        raise InvalidInputError(f"assinatura inválida (n={n}, m={m}): exige {low} <= m < n")


@dataclass(frozen=True)
class ShuffleLabel:
    """
    Rótulo de estrato EO: shuffle w em Π(n,m).

    Attributes:
        w: Permutação de {1..n+m}
        n: Tamanho do primeiro bloco
        m: Tamanho do segundo bloco (0 <= m < n)
    """

    w: Permutation
    n: int
    m: int

    def __post_init__(self) -> None:
        _check_signature(self.n, self.m)
        if self.w.size != self.n + self.m:
            raise InvalidInputError(f"{self.w} não tem tamanho n+m={self.n + self.m}")
        inv = self.w.inverse()
        first = [inv(i) for i in range(1, self.n + 1)]
        second = [inv(i) for i in range(self.n + 1, self.n + self.m + 1)]
        if first != sorted(first) or second != sorted(second):
            raise InvalidInputError(f"{self.w} não é um ({self.n},{self.m})-shuffle")

    @classmethod
    def parse(cls, text: str, n: int, m: int) -> "ShuffleLabel":
        return cls(Permutation.parse(text), n, m)

    def __str__(self) -> str:
        return str(self.w)


def enumerate_shuffles(n: int, m: int, limits: Optional[Limits] = None) -> List[ShuffleLabel]:
    """
    Todos os C(n+m, m) shuffles, em ordem lexicográfica da notação de uma linha.

    Args:
        n, m: Assinatura, 0 <= m < n
        limits: Limites de enumeração (default: load_limits())

    Raises:
        BoundExceededError: n+m acima de shuffle_bound
    """
    _check_signature(n, m)
    limits = limits or load_limits()
    if n + m > limits.shuffle_bound:
        raise BoundExceededError("enumerate_shuffles n+m", limits.shuffle_bound, n + m)

    size = n + m
    labels = [ShuffleLabel(w, n, m) for w in two_block_words(n, m)]
    ensure(len(labels) == comb(size, m), "enumerate_shuffles.count", comb(size, m), len(labels))
    return labels


def shuffle_length(s: ShuffleLabel) -> int:
    """l(w) = Σ_{i<=n} (w⁻¹(i) - i)."""
    inv = s.w.inverse()
    return sum(inv(i) - i for i in range(1, s.n + 1))


def a_sigma(s: ShuffleLabel) -> int:
    """|{i <= n : w⁻¹(i) <= n}|."""
    inv = s.w.inverse()
    return sum(1 for i in range(1, s.n + 1) if inv(i) <= s.n)


def in_s_sharp_by_positions(s: ShuffleLabel) -> bool:
    """Critério w⁻¹(n-m+j) = n+j para j = 1..m."""
    inv = s.w.inverse()
    return all(inv(s.n - s.m + j) == s.n + j for j in range(1, s.m + 1))


class SpecialElements(NamedTuple):
    identity: Permutation
    longest: Permutation
    w_fol: Permutation
    w_0J: Permutation


def w_0J(n: int, m: int) -> Permutation:
    """Inverte os blocos [1,n] e [n+1,n+m]."""
    first = list(range(n, 0, -1))
    second = list(range(n + m, n, -1))
    return Permutation(tuple(first + second))


def special_elements(n: int, m: int) -> SpecialElements:
    """
    Elementos distinguidos de Π(n,m).

    Examples:
        >>> str(special_elements(4, 2).w_fol)
        '125634'
        >>> str(special_elements(4, 2).w_0J)
        '432165'
    """
    _check_signature(n, m, allow_zero=False)
    size = n + m
    fol = list(range(1, n - m + 1)) + list(range(n + 1, size + 1)) + list(range(n - m + 1, n + 1))
    longest = list(range(n + 1, size + 1)) + list(range(1, n + 1))
    return SpecialElements(
        identity=Permutation.identity(size),
        longest=Permutation(tuple(longest)),
        w_fol=Permutation(tuple(fol)),
        w_0J=w_0J(n, m),
    )


@dataclass(frozen=True)
class StratumInfo:
    """
    Estatísticas de um estrato EO.

    Attributes:
        label: Shuffle que rotula o estrato
        length: Dimensão l(w)
        a_sigma: Parte Σ do a-número
        in_s_sharp: Se o estrato está em S_♯ (a_sigma = n-m)
        is_fol: Se w = w_fol
        is_ordinary: Se w é o shuffle mais longo (estrato μ-ordinário)
        fiber_dim: (n-m)(a_sigma - n + m)
        is_core: Se l(w) = 0 (pontos superespeciais)
    """

    label: ShuffleLabel
    length: int
    a_sigma: int
    in_s_sharp: bool
    is_fol: bool
    is_ordinary: bool
    fiber_dim: int
    is_core: bool


def stratum_info(s: ShuffleLabel) -> StratumInfo:
    """Popula StratumInfo; os dois critérios de S_♯ precisam concordar."""
    n, m = s.n, s.m
    length = shuffle_length(s)
    a = a_sigma(s)
    by_a = a == n - m
    by_positions = in_s_sharp_by_positions(s)
    ensure(by_a == by_positions, "stratum_info.in_s_sharp", by_a, by_positions, f"w={s}")
    ensure(length == s.w.inversions(), "stratum_info.length", s.w.inversions(), length, f"w={s}")
    ensure(n - m <= a <= n, "stratum_info.a_sigma_range", f"[{n - m},{n}]", a, f"w={s}")

    if m == 0:
        # w_fol só existe para m >= 1
        is_fol, is_ordinary = False, True
    else:
        special = special_elements(n, m)
        is_fol = s.w == special.w_fol
        is_ordinary = s.w == special.longest
    return StratumInfo(
        label=s,
        length=length,
        a_sigma=a,
        in_s_sharp=by_a,
        is_fol=is_fol,
        is_ordinary=is_ordinary,
        fiber_dim=(n - m) * (a - n + m),
        is_core=length == 0,
    )


def two_block_words(small_n: int, m: int) -> List[Permutation]:
    """
    Permutações de {1..small_n+m} em que 1..small_n e small_n+1..small_n+m
    aparecem em ordem (Π(small_n, m) sem a restrição m < small_n).
    """
    size = small_n + m
    words = []
    for positions in itertools.combinations(range(1, size + 1), m):
        chosen = set(positions)
        upper = iter(range(small_n + 1, size + 1))
        lower = iter(range(1, small_n + 1))
        words.append(Permutation(tuple(next(upper) if pos in chosen else next(lower) for pos in range(1, size + 1))))
    return sorted(words)


def s_sharp_embedding(word: Permutation, n: int, m: int) -> ShuffleLabel:
    """
    ι: Π(n-m, m) → Π(n, m).

    Os valores n-m+j do segundo bloco viram n+j e os valores n-m+1..n são
    anexados ao final; a imagem é exatamente o conjunto S_♯ de Π(n, m).

    Examples:
        >>> str(s_sharp_embedding(Permutation.parse("1234"), 4, 2))
        '125634'
    """
    _check_signature(n, m, allow_zero=False)
    small_n = n - m
    if word.size != n:
        raise InvalidInputError(f"{word} precisa ter tamanho n={n}")
    images = [v if v <= small_n else v + m for v in word.images]
    images.extend(range(small_n + 1, n + 1))
    return ShuffleLabel(Permutation(tuple(images)), n, m)


def s_sharp_members(n: int, m: int, limits: Optional[Limits] = None) -> List[ShuffleLabel]:
    return [s for s in enumerate_shuffles(n, m, limits) if a_sigma(s) == n - m]
