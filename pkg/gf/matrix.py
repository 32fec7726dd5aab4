"""
Matrizes sobre F_{p^2} armazenadas como dois arrays numpy (partes a e b).

Convenção de linhas: um subespaço é gerado pelas linhas de uma matriz e a
imagem de um subespaço G por um mapa M é o espaço das linhas de G @ M.
A forma escalonada reduzida (RREF) é a representação canônica de subespaços.
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from core.errors import InvalidInputError
from gf.field import FieldContext, FqElt


class FqMatrix:
    """
    Matriz r×c sobre F_{p^2}.

    Attributes:
        ctx: Contexto do corpo
        re: Array int64 com as partes a (entradas a + b·t)
        im: Array int64 com as partes b
    """

    __slots__ = ("ctx", "re", "im")

    def __init__(self, ctx: FieldContext, re: np.ndarray, im: np.ndarray):
        if re.shape != im.shape or re.ndim != 2:
            raise InvalidInputError(f"partes com formatos incompatíveis: {re.shape} vs {im.shape}")
        self.ctx = ctx
        self.re = np.mod(re.astype(np.int64), ctx.p)
        self.im = np.mod(im.astype(np.int64), ctx.p)

    # === CONSTRUTORES ===

    @classmethod
    def zeros(cls, ctx: FieldContext, nrows: int, ncols: int) -> "FqMatrix":
        shape = (nrows, ncols)
        return cls(ctx, np.zeros(shape, dtype=np.int64), np.zeros(shape, dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldContext, size: int) -> "FqMatrix":
        return cls(ctx, np.eye(size, dtype=np.int64), np.zeros((size, size), dtype=np.int64))

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Sequence[Sequence["FqElt | int"]], ncols: int | None = None) -> "FqMatrix":
        """Constrói a partir de listas de FqElt ou inteiros (inteiros ficam no subcorpo primo)."""
        if not rows:
            return cls.zeros(ctx, 0, ncols or 0)
        width = len(rows[0])
        re = np.zeros((len(rows), width), dtype=np.int64)
        im = np.zeros((len(rows), width), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise InvalidInputError("linhas de comprimentos diferentes")
            for j, value in enumerate(row):
                if isinstance(value, FqElt):
                    re[i, j], im[i, j] = value.a, value.b
                else:
                    re[i, j] = value
        return cls(ctx, re, im)

    @classmethod
    def unit_rows(cls, ctx: FieldContext, indices: Iterable[int], ncols: int) -> "FqMatrix":
        """Linhas canônicas e_k (índices 0-based)."""
        idx = list(indices)
        out = cls.zeros(ctx, len(idx), ncols)
        for row, k in enumerate(idx):
            out.re[row, k] = 1
        return out

    # === ACESSO ===

    @property
    def shape(self) -> Tuple[int, int]:
        return self.re.shape

    @property
    def nrows(self) -> int:
        return self.re.shape[0]

    @property
    def ncols(self) -> int:
        return self.re.shape[1]

    def entry(self, i: int, j: int) -> FqElt:
        return FqElt(int(self.re[i, j]), int(self.im[i, j]), self.ctx)

    def rows(self) -> List[Tuple[FqElt, ...]]:
        return [tuple(self.entry(i, j) for j in range(self.ncols)) for i in range(self.nrows)]

    def copy(self) -> "FqMatrix":
        return FqMatrix(self.ctx, self.re.copy(), self.im.copy())

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def is_prime_field(self) -> bool:
        return not self.im.any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.shape == other.shape
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.shape, self.re.tobytes(), self.im.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self.rows())
        return f"FqMatrix({self.nrows}x{self.ncols}: {body})"

    # === ARITMÉTICA ===

    def _check(self, other: "FqMatrix") -> None:
        if other.ctx != self.ctx:
            raise InvalidInputError("matrizes sobre corpos diferentes")

    def __add__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        return FqMatrix(self.ctx, self.re + other.re, self.im + other.im)

    def __sub__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        return FqMatrix(self.ctx, self.re - other.re, self.im - other.im)

    def __neg__(self) -> "FqMatrix":
        return FqMatrix(self.ctx, -self.re, -self.im)

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise InvalidInputError(f"produto {self.shape} @ {other.shape}")
        c = self.ctx.c
        re = self.re @ other.re + c * (self.im @ other.im)
        im = self.re @ other.im + self.im @ other.re
        return FqMatrix(self.ctx, re, im)

    def scale(self, scalar: FqElt) -> "FqMatrix":
        c = self.ctx.c
        return FqMatrix(
            self.ctx,
            scalar.a * self.re + c * scalar.b * self.im,
            scalar.a * self.im + scalar.b * self.re,
        )

    def frob(self) -> "FqMatrix":
        """σ aplicado entrada a entrada."""
        return FqMatrix(self.ctx, self.re.copy(), -self.im)

    def transpose(self) -> "FqMatrix":
        return FqMatrix(self.ctx, self.re.T.copy(), self.im.T.copy())

    def select_rows(self, indices: Sequence[int]) -> "FqMatrix":
        idx = list(indices)
        return FqMatrix(self.ctx, self.re[idx, :], self.im[idx, :])

    def select_columns(self, indices: Sequence[int]) -> "FqMatrix":
        idx = list(indices)
        return FqMatrix(self.ctx, self.re[:, idx], self.im[:, idx])

    def vstack(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        return FqMatrix(self.ctx, np.vstack([self.re, other.re]), np.vstack([self.im, other.im]))

    def hstack(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        return FqMatrix(self.ctx, np.hstack([self.re, other.re]), np.hstack([self.im, other.im]))

    # === ELIMINAÇÃO ===

    def rref(self) -> Tuple["FqMatrix", List[int]]:
        """
        Forma escalonada reduzida, sem linhas nulas.

        Returns:
            (matriz RREF com rank linhas, lista de colunas pivô)
        """
        p, c = self.ctx.p, self.ctx.c
        re, im = self.re.copy(), self.im.copy()
        nrows, ncols = re.shape
        pivots: List[int] = []
        row = 0
        for col in range(ncols):
            if row >= nrows:
                break
            nonzero = np.nonzero(re[row:, col] | im[row:, col])[0]
            if nonzero.size == 0:
                continue
            pick = row + int(nonzero[0])
            if pick != row:
                re[[row, pick]] = re[[pick, row]]
                im[[row, pick]] = im[[pick, row]]
            inv = FqElt(int(re[row, col]), int(im[row, col]), self.ctx).inv()
            new_re = (inv.a * re[row] + c * inv.b * im[row]) % p
            new_im = (inv.a * im[row] + inv.b * re[row]) % p
            re[row], im[row] = new_re, new_im
            # elimina a coluna em todas as outras linhas
            f_re = re[:, col].copy()
            f_im = im[:, col].copy()
            f_re[row] = 0
            f_im[row] = 0
            re = (re - (np.outer(f_re, re[row]) + c * np.outer(f_im, im[row]))) % p
            im = (im - (np.outer(f_re, im[row]) + np.outer(f_im, re[row]))) % p
            pivots.append(col)
            row += 1
        return FqMatrix(self.ctx, re[:row], im[:row]), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_nullspace(self) -> "FqMatrix":
        """Linhas formando base de {v : A v = 0}."""
        reduced, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = FqMatrix.zeros(self.ctx, len(free), self.ncols)
        for k, j in enumerate(free):
            basis.re[k, j] = 1
            for r, pc in enumerate(pivots):
                basis.re[k, pc] = -reduced.re[r, j]
                basis.im[k, pc] = -reduced.im[r, j]
        return FqMatrix(self.ctx, basis.re, basis.im)

    def left_nullspace(self) -> "FqMatrix":
        """Linhas formando base de {x : x A = 0} (núcleo do mapa x ↦ xA)."""
        return self.transpose().right_nullspace()

    def solve(self, rhs: "FqMatrix") -> "FqMatrix | None":
        """
        Resolve A z = rhs (rhs coluna r×1) com variáveis livres nulas.

        Returns:
            z como coluna, ou None se o sistema for inconsistente
        """
        augmented = self.hstack(rhs)
        reduced, pivots = augmented.rref()
        if self.ncols in pivots:
            return None
        z = FqMatrix.zeros(self.ctx, self.ncols, 1)
        for r, pc in enumerate(pivots):
            z.re[pc, 0] = reduced.re[r, self.ncols]
            z.im[pc, 0] = reduced.im[r, self.ncols]
        return z

    def det(self) -> FqElt:
        """Determinante por eliminação (matriz quadrada)."""
        if self.nrows != self.ncols:
            raise InvalidInputError(f"determinante de matriz {self.shape}")
        rows = [list(r) for r in self.rows()]
        size = self.nrows
        result = self.ctx.one()
        for col in range(size):
            pivot = next((r for r in range(col, size) if rows[r][col]), None)
            if pivot is None:
                return self.ctx.zero()
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                result = -result
            lead = rows[col][col]
            result = result * lead
            lead_inv = lead.inv()
            for r in range(col + 1, size):
                factor = rows[r][col] * lead_inv
                if factor:
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
        return result
