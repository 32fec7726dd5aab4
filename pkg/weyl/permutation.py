"""
Permutações de {1..N} em notação de uma linha (1-based).

Forma externa canônica: "561234"; para N > 9 as entradas são separadas por
vírgula ("1,2,10,...").
"""

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple
import itertools

from core.errors import InvalidInputError


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Permutação w com images[i-1] = w(i).

    Attributes:
        images: Tupla com a notação de uma linha
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidInputError(f"não é permutação de 1..{len(self.images)}: {self.images}")

    @classmethod
    def of(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(int(x) for x in images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """
        Aceita "561234" ou "5,6,1,2,3,4".

        Examples:
            >>> Permutation.parse("312").images
            (3, 1, 2)
        """
        cleaned = text.strip()
        if not cleaned:
            raise InvalidInputError("permutação vazia")
        try:
            if "," in cleaned:
                values = [int(tok) for tok in cleaned.split(",")]
            else:
                values = [int(ch) for ch in cleaned]
        except ValueError as e:
            raise InvalidInputError(f"permutação mal formada: {text!r}") from e
        return cls.of(values)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for pos, value in enumerate(self.images, start=1):
            inv[value - 1] = pos
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composição (self·other)(i) = self(other(i))."""
        if other.size != self.size:
            raise InvalidInputError(f"tamanhos diferentes: {self.size} vs {other.size}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inversions(self) -> int:
        """Número de pares i < j com w(i) > w(j)."""
        w = self.images
        return sum(1 for i, j in itertools.combinations(range(self.size), 2) if w[i] > w[j])

    def swap_positions(self, i: int, j: int) -> "Permutation":
        """w·(i j): troca as entradas nas posições i e j."""
        values = list(self.images)
        values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
        return Permutation(tuple(values))

    def __str__(self) -> str:
        sep = "," if self.size > 9 else ""
        return sep.join(str(x) for x in self.images)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def all_permutations(size: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, size + 1)):
        yield Permutation(images)
