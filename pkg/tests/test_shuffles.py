from math import comb

import pytest
from hypothesis import given, strategies as st

from core.config import Limits
from core.errors import BoundExceededError, InvalidInputError
from weyl.permutation import Permutation
from weyl.shuffles import (
    ShuffleLabel,
    a_sigma,
    enumerate_shuffles,
    in_s_sharp_by_positions,
    s_sharp_embedding,
    s_sharp_members,
    shuffle_length,
    special_elements,
    stratum_info,
    two_block_words,
)


def label(text, n, m):
    return ShuffleLabel.parse(text, n, m)


def test_small_enumerations():
    assert [str(s) for s in enumerate_shuffles(2, 1)] == ["123", "132", "312"]
    assert [str(s) for s in enumerate_shuffles(3, 0)] == ["123"]
    assert len(enumerate_shuffles(4, 2)) == 15


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 10) for m in range(n) if n + m <= 9])
def test_binomial_count(n, m):
    shuffles = enumerate_shuffles(n, m)
    assert len(shuffles) == comb(n + m, m)
    assert len(set(s.w for s in shuffles)) == len(shuffles)


def test_length_and_a_sigma_examples():
    assert shuffle_length(label("561234", 4, 2)) == 8
    assert shuffle_length(label("125634", 4, 2)) == 4
    assert shuffle_length(label("123456", 4, 2)) == 0
    assert a_sigma(label("512346", 4, 2)) == 3
    assert a_sigma(label("125634", 4, 2)) == 2


def test_special_elements_4_2():
    special = special_elements(4, 2)
    assert str(special.identity) == "123456"
    assert str(special.longest) == "561234"
    assert str(special.w_fol) == "125634"
    assert str(special.w_0J) == "432165"


def test_stratum_info_4_2():
    fol = stratum_info(label("125634", 4, 2))
    assert fol.is_fol and fol.in_s_sharp and not fol.is_ordinary
    assert (fol.length, fol.a_sigma, fol.fiber_dim) == (4, 2, 0)

    top = stratum_info(label("561234", 4, 2))
    assert top.is_ordinary and top.in_s_sharp and top.length == 8

    core = stratum_info(label("123456", 4, 2))
    assert core.is_core and not core.in_s_sharp
    assert core.fiber_dim == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_core_fiber_for_m_1(n):
    info = stratum_info(ShuffleLabel(Permutation.identity(n + 1), n, 1))
    assert info.fiber_dim == n - 1


def test_m_zero_is_ordinary_but_not_fol():
    info = stratum_info(label("1234", 4, 0))
    assert info.is_ordinary and info.is_core
    assert info.is_fol is False


def test_s_sharp_embedding():
    assert str(s_sharp_embedding(Permutation.parse("1234"), 4, 2)) == "125634"
    assert str(s_sharp_embedding(Permutation.parse("3412"), 4, 2)) == "561234"


@pytest.mark.parametrize("n,m", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_s_sharp_is_image_of_embedding(n, m):
    members = {s.w for s in s_sharp_members(n, m)}
    image = {s_sharp_embedding(w, n, m).w for w in two_block_words(n - m, m)}
    assert members == image
    assert len(members) == comb(n, m)
    assert all(in_s_sharp_by_positions(ShuffleLabel(w, n, m)) for w in members)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, 10**6))))
def test_length_is_inversion_count(case):
    n, m, pick = case
    shuffles = enumerate_shuffles(n, m)
    s = shuffles[pick % len(shuffles)]
    assert shuffle_length(s) == s.w.inversions()
    assert n - m <= a_sigma(s) <= n


@pytest.mark.parametrize("n", [2, 3, 5])
def test_a_sigma_for_m_one(n):
    shuffles = enumerate_shuffles(n, 1)
    assert a_sigma(shuffles[0]) == n
    assert [a_sigma(s) for s in shuffles[1:]] == [n - 1] * n


def test_invalid_labels():
    with pytest.raises(InvalidInputError):
        label("213", 2, 1)
    with pytest.raises(InvalidInputError):
        label("1234", 2, 2)
    with pytest.raises(InvalidInputError):
        label("1243", 4, 1)
    with pytest.raises(InvalidInputError):
        Permutation.parse("1134")


def test_shuffle_bound():
    with pytest.raises(BoundExceededError):
        enumerate_shuffles(5, 3, Limits(shuffle_bound=7))


def test_wide_permutations_use_commas():
    w = Permutation.identity(10)
    assert str(w) == "1,2,3,4,5,6,7,8,9,10"
    assert Permutation.parse(str(w)) == w
