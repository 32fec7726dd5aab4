"""
Matriz de Hasse V_P^(p) ∘ V_Q no módulo padrão.
"""

from core.errors import ensure
from dieudonne.module import standard_fol_module
from gf.field import FieldContext, FqElt
from gf.matrix import FqMatrix


def hasse_matrix(n: int, m: int, ctx: FieldContext) -> FqMatrix:
    """
    Matriz m×m de V∘V restrita a Q = Span{f_[m+1,2m]}, na base de Q.

    A imagem de Q por V passa pelo twist 1 (σ nas coordenadas) e volta a Q
    no twist 2. Nula sse 2m <= n.
    """
    mod = standard_fol_module(n, m, ctx)
    q_cols = mod.f_range(m + 1, 2 * m)
    q_rows = mod.unit_rows(q_cols)
    once = q_rows @ mod.V_matrix
    twice = once.frob() @ mod.V_matrix

    outside = [k for k in range(mod.dim) if k not in q_cols]
    ensure(twice.select_columns(outside).is_zero(), "hasse_matrix.lands_in_Q", True, False, f"(n,m)=({n},{m})")
    return twice.select_columns(q_cols)


def hasse_determinant(n: int, m: int, ctx: FieldContext) -> FqElt:
    """Invariante de Hasse no ponto: sempre 0 em S_fol."""
    return hasse_matrix(n, m, ctx).det()
