import pytest

from core.errors import InvalidInputError
from dieudonne.canonical import canonical_word
from dieudonne.lattice import LatticePair, lattice_step, r_of, word_steps
from dieudonne.module import standard_fol_module
from dieudonne.subspace import Subspace
from gf.field import FieldContext

CTX = FieldContext.for_prime(3)


@pytest.mark.parametrize("n,m,r", [(3, 2, 1), (4, 3, 2), (5, 4, 3), (5, 3, 1), (7, 5, 2)])
def test_r_window(n, m, r):
    assert r_of(n, m) == r
    assert r * n < m * (r + 1) and m * (r + 2) <= n * (r + 1)


@pytest.mark.parametrize("n,m", [(4, 2), (5, 2), (2, 1), (3, 3)])
def test_r_undefined(n, m):
    with pytest.raises(InvalidInputError):
        r_of(n, m)


def test_lattice_step_examples():
    assert lattice_step(4, 2, LatticePair(4, 2), "F") == LatticePair(2, 2)
    assert lattice_step(4, 2, LatticePair(0, 0), "V^-1") == LatticePair(4, 2)
    assert lattice_step(4, 2, LatticePair(6, 6), "F") == LatticePair(4, 2)
    assert lattice_step(4, 2, LatticePair(6, 6), "V^-1") == LatticePair(6, 6)


def test_lattice_step_rejects_out_of_range():
    with pytest.raises(InvalidInputError):
        lattice_step(4, 2, LatticePair(7, 0), "F")
    with pytest.raises(InvalidInputError):
        lattice_step(4, 2, LatticePair(0, 0), "V")


def test_word_steps():
    assert word_steps(1) == ["V^-1", "F", "F", "F", "V^-1", "V^-1"]
    assert len(word_steps(3)) == 1 + 7 + 6


@pytest.mark.parametrize("n,m,final", [(3, 2, (4, 3)), (5, 4, (8, 7)), (4, 3, (6, 5)), (5, 3, (6, 5))])
def test_canonical_word_result(n, m, final):
    word = canonical_word(n, m, CTX)
    assert (word.lattice_result.a, word.lattice_result.b) == final
    mod = standard_fol_module(n, m, CTX)
    assert word.matrix_result == Subspace.lattice(mod, *final)


def test_trace_3_2():
    word = canonical_word(3, 2, CTX)
    pairs = [(step.pair.a, step.pair.b) for step in word.trace]
    assert pairs == [(3, 2), (2, 2), (2, 1), (1, 1), (3, 3), (4, 3)]
    assert all(step.pair == step.expected for step in word.trace)
    assert word.trace[0].word == "V^-1(0)"
    assert word.trace[-1].word == "V^-2 F^3 V^-1(0)"


def test_canonical_word_needs_n_below_2m():
    with pytest.raises(InvalidInputError):
        canonical_word(4, 2, CTX)


CANONICAL_SWEEP = [(n, m) for n in range(2, 12) for m in range(1, n) if n < 2 * m and n + m <= 12]


@pytest.mark.parametrize("n,m", CANONICAL_SWEEP)
def test_canonical_word_sweep(n, m):
    r = r_of(n, m)
    windows = [k for k in range(0, 2 * n) if k * n < m * (k + 1) and m * (k + 2) <= n * (k + 1)]
    assert windows == [r]

    word = canonical_word(n, m, CTX)
    final = (2 * m, r * n - (r - 1) * m)
    assert word.r == r
    assert (word.lattice_result.a, word.lattice_result.b) == final
    assert word.matrix_result == Subspace.lattice(standard_fol_module(n, m, CTX), *final)
    assert len(word.trace) == len(word_steps(r))
    assert all(step.pair == step.expected for step in word.trace)
