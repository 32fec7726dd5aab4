"""
Poset dos estratos EO: relação completa, redução transitiva e comparação com
o diagrama conhecido para (n,m) = (4,2).
"""

import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from core.config import Limits, load_limits
from core.errors import ensure
from core.logger import get_logger
from weyl.bruhat import bruhat_leq
from weyl.eo_order import eo_leq
from weyl.permutation import Permutation
from weyl.shuffles import StratumInfo, enumerate_shuffles, stratum_info

logger = get_logger(__name__)

Edge = Tuple[str, str]

# Diagrama dos 15 estratos de (4,2): 21 arestas (maior → menor)
DIAGRAM_4_2: Tuple[Edge, ...] = (
    ("561234", "516234"),
    ("516234", "156234"),
    ("516234", "512634"),
    ("156234", "152634"),
    ("512634", "152634"),
    ("512634", "512364"),
    ("152634", "125634"),
    ("152634", "152364"),
    ("152634", "512346"),
    ("512364", "152364"),
    ("512364", "512346"),
    ("125634", "125364"),
    ("152364", "125364"),
    ("152364", "152346"),
    ("512346", "152346"),
    ("125364", "123564"),
    ("125364", "125346"),
    ("152346", "125346"),
    ("123564", "123546"),
    ("125346", "123546"),
    ("123546", "123456"),
)


@dataclass(frozen=True)
class StratumPoset:
    """
    Poset (Π(n,m), ⪯) com suas coberturas.

    Attributes:
        n, m: Assinatura
        nodes: StratumInfo de cada shuffle, em ordem lexicográfica
        covers: Pares (maior, menor) da redução transitiva
    """

    n: int
    m: int
    nodes: Tuple[StratumInfo, ...]
    covers: Tuple[Tuple[Permutation, Permutation], ...]
    _index: Dict[Permutation, StratumInfo] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self._index.update({info.label.w: info for info in self.nodes})

    def info(self, w: Permutation) -> StratumInfo:
        return self._index[w]

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(info.label.w for info in self.nodes)
        g.add_edges_from(self.covers)
        return g

    def closure(self) -> FrozenSet[Tuple[Permutation, Permutation]]:
        """Pares estritos (maior, menor) do fecho transitivo das coberturas."""
        g = nx.transitive_closure_dag(self.graph())
        return frozenset(g.edges)

    def maximal(self) -> List[Permutation]:
        g = self.graph()
        return sorted(w for w in g.nodes if g.in_degree(w) == 0)

    def minimal(self) -> List[Permutation]:
        g = self.graph()
        return sorted(w for w in g.nodes if g.out_degree(w) == 0)

    def is_chain(self) -> bool:
        """Cadeia: cada nó tem no máximo uma cobertura para cima e uma para baixo."""
        g = self.graph()
        return nx.is_weakly_connected(g) and all(g.in_degree(w) <= 1 and g.out_degree(w) <= 1 for w in g.nodes)

    def ranks(self) -> Dict[int, List[Permutation]]:
        out: Dict[int, List[Permutation]] = {}
        for info in self.nodes:
            out.setdefault(info.length, []).append(info.label.w)
        return dict(sorted(out.items(), reverse=True))


def eo_relation(n: int, m: int, limits: Optional[Limits] = None) -> nx.DiGraph:
    """Relação estrita ≻ completa: aresta w → w' quando w' ⪯ w e w' != w."""
    labels = enumerate_shuffles(n, m, limits)
    relation = nx.DiGraph()
    relation.add_nodes_from(s.w for s in labels)
    for upper in labels:
        for lower in labels:
            if upper != lower and eo_leq(lower, upper, limits):
                relation.add_edge(upper.w, lower.w)
    return relation


def eo_poset(n: int, m: int, limits: Optional[Limits] = None, relation: Optional[nx.DiGraph] = None) -> StratumPoset:
    """
    Constrói o poset de estratos EO de assinatura (n,m).

    Args:
        relation: Relação estrita já calculada por eo_relation (evita refazer as comparações)

    Raises:
        ConsistencyError: relação não antissimétrica ou cobertura sem queda de comprimento
        BoundExceededError: propagado de enumerate_shuffles / eo_leq
    """
    limits = limits or load_limits()
    start = time.perf_counter()
    logger.info(f"🔢 Construindo poset EO ({n},{m})")

    labels = enumerate_shuffles(n, m, limits)
    infos = tuple(stratum_info(s) for s in labels)
    if relation is None:
        relation = eo_relation(n, m, limits)
    ensure(nx.is_directed_acyclic_graph(relation), "eo_poset.antisymmetry", True, False, f"(n,m)=({n},{m})")

    reduced = nx.transitive_reduction(relation)
    lengths = {info.label.w: info.length for info in infos}
    covers = tuple(sorted(reduced.edges))
    for upper, lower in covers:
        ensure(
            lengths[upper] > lengths[lower],
            "eo_poset.cover_length",
            f"l({upper}) > l({lower})",
            (lengths[upper], lengths[lower]),
        )

    poset = StratumPoset(n=n, m=m, nodes=infos, covers=covers)
    elapsed = time.perf_counter() - start
    logger.info(f"✅ Poset EO ({n},{m}): {len(infos)} estratos, {len(covers)} coberturas em {elapsed:.2f}s")
    return poset


@dataclass(frozen=True)
class DiagramComparison:
    closure_equal: bool
    covers_equal: bool
    missing_covers: Tuple[Edge, ...]
    extra_covers: Tuple[Edge, ...]


def compare_with_diagram(poset: StratumPoset, diagram: Tuple[Edge, ...] = DIAGRAM_4_2) -> DiagramComparison:
    """Compara fechos transitivos e, separadamente, as coberturas com um diagrama dado."""
    drawn = nx.DiGraph()
    drawn.add_nodes_from(info.label.w for info in poset.nodes)
    drawn.add_edges_from((Permutation.parse(a), Permutation.parse(b)) for a, b in diagram)
    drawn_closure = frozenset(nx.transitive_closure_dag(drawn).edges)

    computed = {(str(a), str(b)) for a, b in poset.covers}
    displayed = set(diagram)
    return DiagramComparison(
        closure_equal=drawn_closure == poset.closure(),
        covers_equal=computed == displayed,
        missing_covers=tuple(sorted(displayed - computed)),
        extra_covers=tuple(sorted(computed - displayed)),
    )


def eo_minimal_in_s_sharp(poset: StratumPoset) -> List[Permutation]:
    """Membros de S_♯ sem outro membro de S_♯ abaixo na ordem EO."""
    members = {info.label.w for info in poset.nodes if info.in_s_sharp}
    closure = poset.closure()
    return sorted(w for w in members if not any((w, v) in closure for v in members))


def bruhat_minimal_in_s_sharp(poset: StratumPoset) -> List[Permutation]:
    """Mesmo cálculo na ordem de Bruhat."""
    members = [info.label.w for info in poset.nodes if info.in_s_sharp]
    return sorted(w for w in members if not any(v != w and bruhat_leq(v, w) for v in members))
