"""
Subespaços de D₀ e de seus twists de Frobenius.

Um Subspace guarda o índice de twist (0, 1 ou 2) e a base em forma
escalonada reduzida, que é canônica: igualdade de subespaços é igualdade de
RREF. V sobe o twist em 1, F desce em 1, twist() aplica σ às coordenadas.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from core.errors import InvalidInputError
from dieudonne.module import DieudonneModule, MapName, lattice_indices
from gf.matrix import FqMatrix

MAX_TWIST = 2


@dataclass(frozen=True)
class Subspace:
    """
    Subespaço de D₀^(p^twist).

    Attributes:
        twist: Índice do twist de Frobenius
        basis: Linhas em RREF (sem linhas nulas)
    """

    twist: int
    basis: FqMatrix

    def __post_init__(self) -> None:
        if not 0 <= self.twist <= MAX_TWIST:
            raise InvalidInputError(f"twist {self.twist} fora de [0, {MAX_TWIST}]")

    @classmethod
    def span(cls, rows: FqMatrix, twist: int = 0) -> "Subspace":
        reduced, _ = rows.rref()
        return cls(twist, reduced)

    @classmethod
    def of_indices(cls, mod: DieudonneModule, indices: Sequence[int], twist: int = 0) -> "Subspace":
        return cls.span(mod.unit_rows(sorted(indices)), twist)

    @classmethod
    def zero(cls, mod: DieudonneModule, twist: int = 0) -> "Subspace":
        return cls(twist, FqMatrix.zeros(mod.ctx, 0, mod.dim))

    @classmethod
    def whole(cls, mod: DieudonneModule, twist: int = 0) -> "Subspace":
        return cls(twist, FqMatrix.identity(mod.ctx, mod.dim))

    @classmethod
    def lattice(cls, mod: DieudonneModule, a: int, b: int, twist: int = 0) -> "Subspace":
        """D(a,b) = Span{e_[1,a], f_[1,b]}."""
        return cls.of_indices(mod, lattice_indices(mod, a, b), twist)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def ambient_dim(self) -> int:
        return self.basis.ncols

    def _same_twist(self, other: "Subspace") -> None:
        if other.twist != self.twist:
            raise InvalidInputError(f"twists diferentes: {self.twist} vs {other.twist}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_twist(other)
        return Subspace.span(self.basis.vstack(other.basis), self.twist)

    def intersect(self, other: "Subspace") -> "Subspace":
        """A ∩ B via relações λA + μB = 0."""
        self._same_twist(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.twist, FqMatrix.zeros(self.basis.ctx, 0, self.ambient_dim))
        relations = self.basis.vstack(other.basis).left_nullspace()
        lam = relations.select_columns(range(self.dim))
        return Subspace.span(lam @ self.basis, self.twist)

    def contains(self, other: "Subspace") -> bool:
        self._same_twist(other)
        return (self + other).dim == self.dim

    def coordinate_indices(self) -> Optional[List[int]]:
        """Índices da base se o subespaço é gerado por vetores da base padrão."""
        indices = []
        for r in range(self.dim):
            row_re, row_im = self.basis.re[r], self.basis.im[r]
            support = [k for k in range(self.ambient_dim) if row_re[k] or row_im[k]]
            if len(support) != 1:
                return None
            indices.append(support[0])
        return indices

    def is_graded(self) -> bool:
        """Cada linha da RREF suportada só em e ou só em f."""
        half = self.ambient_dim // 2
        for r in range(self.dim):
            nz = [k for k in range(self.ambient_dim) if self.basis.re[r, k] or self.basis.im[r, k]]
            if nz and not (nz[-1] < half or nz[0] >= half):
                return False
        return True

    def sigma_part(self) -> "Subspace":
        half = self.ambient_dim // 2
        e_span = Subspace.span(FqMatrix.unit_rows(self.basis.ctx, range(half), self.ambient_dim), self.twist)
        return self.intersect(e_span)

    def sigma_bar_part(self) -> "Subspace":
        half = self.ambient_dim // 2
        f_span = Subspace.span(
            FqMatrix.unit_rows(self.basis.ctx, range(half, self.ambient_dim), self.ambient_dim), self.twist
        )
        return self.intersect(f_span)


def type_profile(sub: Subspace) -> Tuple[int, int]:
    """
    (dim Σ, dim Σ̄) de um subespaço graduado.

    Raises:
        InvalidInputError: subespaço não graduado
    """
    if not sub.is_graded():
        raise InvalidInputError("type_profile exige subespaço graduado")
    half = sub.ambient_dim // 2
    sigma = sum(
        1 for r in range(sub.dim) if any(sub.basis.re[r, k] or sub.basis.im[r, k] for k in range(half))
    )
    return sigma, sub.dim - sigma


def is_balanced(sub: Subspace) -> bool:
    sigma, sigma_bar = type_profile(sub)
    return sigma == sigma_bar


def twist(sub: Subspace) -> Subspace:
    """Aplica σ às coordenadas e sobe o índice de twist."""
    return Subspace.span(sub.basis.frob(), sub.twist + 1)


def map_image(mod: DieudonneModule, which: MapName, src: Subspace) -> Subspace:
    """
    Imagem de src por F (twist - 1) ou V (twist + 1).

    Raises:
        InvalidInputError: src no twist errado para o mapa
    """
    if which == "F":
        if src.twist < 1:
            raise InvalidInputError("F parte de D₀^(p): src precisa ter twist >= 1")
        target = src.twist - 1
    elif which == "V":
        if src.twist >= MAX_TWIST:
            raise InvalidInputError(f"V sairia do twist máximo {MAX_TWIST}")
        target = src.twist + 1
    else:
        raise InvalidInputError(f"mapa desconhecido: {which!r}")
    return Subspace.span(src.basis @ mod.matrix(which), target)


def map_kernel(mod: DieudonneModule, which: MapName) -> Subspace:
    """ker V ⊂ D₀ (twist 0) ou ker F ⊂ D₀^(p) (twist 1)."""
    source_twist = 1 if which == "F" else 0
    return Subspace.span(mod.matrix(which).left_nullspace(), source_twist)


def map_preimage(mod: DieudonneModule, which: MapName, tgt: Subspace) -> Subspace:
    """
    {x : V(x) ∈ tgt}, resolvido como núcleo de "aplica V e projeta no quociente".

    Raises:
        InvalidInputError: mapa diferente de V ou tgt no twist 0
    """
    if which != "V":
        raise InvalidInputError("map_preimage só é definido para V")
    if tgt.twist < 1:
        raise InvalidInputError("V⁻¹ exige alvo em twist >= 1")
    # colunas c com tgt·c = 0 caracterizam tgt
    annihilator = tgt.basis.right_nullspace()
    composite = mod.V_matrix @ annihilator.transpose()
    return Subspace.span(composite.left_nullspace(), tgt.twist - 1)


def span_labels(mod: DieudonneModule, sub: Subspace) -> List[str]:
    """
    Rótulos da base quando o subespaço é coordenado ("e1^(p)", "f3"), ou as
    linhas RREF em forma "c·rótulo + ..." caso contrário.
    """
    suffix = "^(p)" * sub.twist if sub.twist < 2 else "^(p²)"
    indices = sub.coordinate_indices()
    if indices is not None:
        return [mod.label(k) + suffix for k in indices]
    rows = []
    for r in range(sub.dim):
        terms = [
            f"({sub.basis.entry(r, k)}){mod.label(k)}{suffix}"
            for k in range(sub.ambient_dim)
            if sub.basis.re[r, k] or sub.basis.im[r, k]
        ]
        rows.append(" + ".join(terms))
    return rows
