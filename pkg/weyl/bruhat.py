"""
Ordem de Bruhat em 𝔖_N.

bruhat_leq usa o critério de tableau: u <= v sse, para todo k, o prefixo
ordenado u(1..k) é menor ou igual entrada a entrada ao prefixo ordenado v(1..k).
bruhat_graph gera o oráculo de coberturas u → u·t (comprimento +1).
"""

import itertools
from functools import lru_cache
from typing import Dict, FrozenSet

import networkx as nx

from core.errors import InvalidInputError
from weyl.permutation import Permutation, all_permutations


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    Decide u <= v na ordem de Bruhat.

    Examples:
        >>> bruhat_leq(Permutation.parse("132"), Permutation.parse("312"))
        True
        >>> bruhat_leq(Permutation.parse("312"), Permutation.parse("132"))
        False
    """
    if u.size != v.size:
        raise InvalidInputError(f"tamanhos diferentes: {u.size} vs {v.size}")
    for k in range(1, u.size):
        pu = sorted(u.images[:k])
        pv = sorted(v.images[:k])
        if any(a > b for a, b in zip(pu, pv)):
            return False
    return True


def bruhat_graph(size: int) -> nx.DiGraph:
    """Grafo de coberturas de 𝔖_size: aresta u → u·(i j) quando o comprimento sobe 1."""
    graph = nx.DiGraph()
    perms = list(all_permutations(size))
    graph.add_nodes_from(perms)
    for u in perms:
        base = u.inversions()
        for i, j in itertools.combinations(range(1, size + 1), 2):
            w = u.swap_positions(i, j)
            if w.inversions() == base + 1:
                graph.add_edge(u, w)
    return graph


@lru_cache(maxsize=8)
def _down_sets(size: int) -> Dict[Permutation, FrozenSet[Permutation]]:
    graph = bruhat_graph(size)
    return {v: frozenset(nx.ancestors(graph, v)) | {v} for v in graph.nodes}


def bruhat_leq_oracle(u: Permutation, v: Permutation) -> bool:
    """u <= v por alcançabilidade no grafo de coberturas (N pequeno)."""
    if u.size != v.size:
        raise InvalidInputError(f"tamanhos diferentes: {u.size} vs {v.size}")
    return u in _down_sets(u.size)[v]
