from math import comb

import pytest

from core.config import Limits
from core.errors import BoundExceededError, InvalidInputError
from weyl.bruhat import bruhat_leq
from weyl.eo_order import eo_leq, levi_elements
from weyl.export import poset_to_dict, poset_to_dot
from weyl.poset import (
    DIAGRAM_4_2,
    bruhat_minimal_in_s_sharp,
    compare_with_diagram,
    eo_minimal_in_s_sharp,
    eo_poset,
    eo_relation,
)
from weyl.shuffles import ShuffleLabel, enumerate_shuffles, special_elements


@pytest.fixture(scope="module")
def poset_4_2():
    return eo_poset(4, 2)


def label(text, n, m):
    return ShuffleLabel.parse(text, n, m)


def test_known_relations():
    assert eo_leq(label("125634", 4, 2), label("152634", 4, 2))
    assert eo_leq(label("512346", 4, 2), label("512634", 4, 2))
    assert not eo_leq(label("561234", 4, 2), label("125634", 4, 2))


def test_levi_size():
    assert len(levi_elements(4, 2)) == 48
    assert len(levi_elements(3, 0)) == 6


def test_eo_leq_errors():
    with pytest.raises(InvalidInputError):
        eo_leq(label("123", 2, 1), label("1234", 3, 1))
    with pytest.raises(BoundExceededError):
        eo_leq(label("561234", 4, 2), label("125634", 4, 2), Limits(eo_search_bound=10))


def test_diagram_4_2(poset_4_2):
    assert len(poset_4_2.nodes) == 15
    assert len(DIAGRAM_4_2) == 21
    lengths = sorted((info.length for info in poset_4_2.nodes), reverse=True)
    assert lengths == [8, 7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 2, 2, 1, 0]
    assert compare_with_diagram(poset_4_2).closure_equal


def test_extremes_4_2(poset_4_2):
    assert [str(w) for w in poset_4_2.maximal()] == ["561234"]
    assert [str(w) for w in poset_4_2.minimal()] == ["123456"]


def test_s_sharp_minimum_is_w_fol(poset_4_2):
    w_fol = special_elements(4, 2).w_fol
    assert eo_minimal_in_s_sharp(poset_4_2) == [w_fol]
    assert bruhat_minimal_in_s_sharp(poset_4_2) == [w_fol]


def test_covers_drop_length(poset_4_2):
    for upper, lower in poset_4_2.covers:
        assert poset_4_2.info(upper).length > poset_4_2.info(lower).length


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_m_1_is_chain(n):
    poset = eo_poset(n, 1)
    assert poset.is_chain()
    assert len(poset.nodes) == n + 1
    assert len(poset.covers) == n


def test_chain_2_1():
    poset = eo_poset(2, 1)
    assert [(str(a), str(b)) for a, b in poset.covers] == [("132", "123"), ("312", "132")]


def test_m_0_single_node():
    poset = eo_poset(3, 0)
    assert len(poset.nodes) == 1
    assert poset.covers == ()


POSET_SWEEP = [(n, m) for n in range(2, 7) for m in range(1, n) if n + m <= 7]


@pytest.mark.parametrize("n,m", POSET_SWEEP)
def test_relation_is_a_partial_order_containing_bruhat(n, m):
    relation = eo_relation(n, m)
    for a, b in relation.edges:
        assert not relation.has_edge(b, a)
        for c in relation.successors(b):
            assert relation.has_edge(a, c)
    poset = eo_poset(n, m, relation=relation)
    assert set(poset.closure()) == set(relation.edges)
    labels = enumerate_shuffles(n, m)
    for upper in labels:
        for lower in labels:
            if upper != lower and bruhat_leq(lower.w, upper.w):
                assert relation.has_edge(upper.w, lower.w)

    special = special_elements(n, m)
    assert len(poset.nodes) == comb(n + m, m)
    assert poset.maximal() == [special.longest]
    assert poset.minimal() == [special.identity]
    assert eo_minimal_in_s_sharp(poset) == [special.w_fol]
    assert bruhat_minimal_in_s_sharp(poset) == [special.w_fol]
    assert poset.info(special.w_fol).length == m * m
    if m == 1:
        assert poset.is_chain() and len(poset.covers) == n


def test_dot_export(poset_4_2):
    dot = poset_to_dot(poset_4_2)
    assert dot.startswith('digraph "EO_4_2" {')
    assert dot.count("[label=") == 15
    assert dot.count("rank=same") == 9
    assert dot.count("->") == len(poset_4_2.covers)
    assert dot.count("{") == dot.count("}")


def test_dict_export(poset_4_2):
    data = poset_to_dict(poset_4_2)
    assert (data["n"], data["m"]) == (4, 2)
    assert len(data["strata"]) == 15
    entry = next(s for s in data["strata"] if s["w"] == "125634")
    assert entry == {"w": "125634", "length": 4, "a_sigma": 2, "in_s_sharp": True, "is_fol": True, "fiber_dim": 0}
    assert all(len(edge) == 2 for edge in data["covers"])
