import itertools

import pytest

from core.errors import InvalidInputError
from weyl.bruhat import bruhat_graph, bruhat_leq, bruhat_leq_oracle
from weyl.permutation import Permutation, all_permutations


def P(text):
    return Permutation.parse(text)


def test_examples():
    assert bruhat_leq(P("132"), P("312"))
    assert not bruhat_leq(P("312"), P("132"))
    assert not bruhat_leq(P("213"), P("132"))
    assert not bruhat_leq(P("132"), P("213"))
    assert bruhat_leq(P("125634"), P("152634"))


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_tableau_criterion_matches_cover_graph(size):
    perms = list(all_permutations(size))
    for u, v in itertools.product(perms, repeat=2):
        assert bruhat_leq(u, v) == bruhat_leq_oracle(u, v)


@pytest.mark.parametrize("size", [3, 4])
def test_identity_and_longest_are_extremes(size):
    identity = Permutation.identity(size)
    longest = Permutation(tuple(range(size, 0, -1)))
    for w in all_permutations(size):
        assert bruhat_leq(identity, w)
        assert bruhat_leq(w, longest)


def test_cover_graph_raises_length_by_one():
    graph = bruhat_graph(4)
    assert graph.number_of_nodes() == 24
    assert all(v.inversions() == u.inversions() + 1 for u, v in graph.edges)


def test_size_mismatch():
    with pytest.raises(InvalidInputError):
        bruhat_leq(P("12"), P("123"))
