"""
Ordem EO em Π(n,m).

w' ⪯ w sse existe y ∈ W_J = 𝔖_n × 𝔖_m (blocos) com y·w'·w_0J·y⁻¹·w_0J <= w
na ordem de Bruhat. A busca é exaustiva em W_J, depois do atalho w' <= w.
"""

import itertools
from functools import lru_cache
from math import factorial
from typing import Optional, Tuple

from core.config import Limits, load_limits
from core.errors import BoundExceededError, InvalidInputError
from weyl.bruhat import bruhat_leq
from weyl.permutation import Permutation
from weyl.shuffles import ShuffleLabel, w_0J


@lru_cache(maxsize=32)
def levi_elements(n: int, m: int) -> Tuple[Permutation, ...]:
    """Elementos de W_J = 𝔖_n × 𝔖_m mergulhados por blocos."""
    out = []
    for first in itertools.permutations(range(1, n + 1)):
        for second in itertools.permutations(range(n + 1, n + m + 1)):
            out.append(Permutation(first + second))
    return tuple(out)


def eo_leq(w1: ShuffleLabel, w2: ShuffleLabel, limits: Optional[Limits] = None) -> bool:
    """
    Decide w1 ⪯ w2.

    Raises:
        InvalidInputError: assinaturas diferentes
        BoundExceededError: n!·m! acima de eo_search_bound
    """
    if (w1.n, w1.m) != (w2.n, w2.m):
        raise InvalidInputError(f"assinaturas diferentes: ({w1.n},{w1.m}) vs ({w2.n},{w2.m})")
    if bruhat_leq(w1.w, w2.w):
        return True

    n, m = w1.n, w1.m
    limits = limits or load_limits()
    search = factorial(n) * factorial(m)
    if search > limits.eo_search_bound:
        raise BoundExceededError("eo_leq |W_J|", limits.eo_search_bound, search)

    w0 = w_0J(n, m)
    tail = w1.w * w0
    for y in levi_elements(n, m):
        if bruhat_leq(y * tail * y.inverse() * w0, w2.w):
            return True
    return False
