import pytest
from hypothesis import given, strategies as st

from core.errors import InvalidInputError
from gf.field import FieldContext, fq_ops, is_prime

PRIMES = [3, 5, 7]


def elements_of(p):
    return st.tuples(st.integers(0, p - 1), st.integers(0, p - 1))


def test_canonical_non_residue():
    assert FieldContext.for_prime(3).c == 2
    assert FieldContext.for_prime(5).c == 2
    assert FieldContext.for_prime(7).c == 3


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_rejects_non_odd_primes(p):
    with pytest.raises(InvalidInputError):
        FieldContext.for_prime(p)


def test_rejects_residue_as_c():
    with pytest.raises(InvalidInputError):
        FieldContext(7, 2)


def test_is_prime():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_frobenius_of_t():
    ops = fq_ops(FieldContext.for_prime(3))
    assert str(ops.frob(ops.ctx.t())) == "0+2*t"
    assert ops.ctx.t() * ops.ctx.t() == ops.ctx.elt(2)


@pytest.mark.parametrize("p", PRIMES)
def test_frobenius_is_pth_power_and_involution(p):
    ctx = FieldContext.for_prime(p)
    for x in ctx.elements():
        assert x ** p == x.frob()
        assert x.frob().frob() == x
        assert x ** (p * p) == x


@pytest.mark.parametrize("p", PRIMES)
def test_trace_fibers_have_p_elements(p):
    ctx = FieldContext.for_prime(p)
    fibers = {}
    for x in ctx.elements():
        fibers[x.trace()] = fibers.get(x.trace(), 0) + 1
    assert fibers == {t: p for t in range(p)}


def test_inverse_of_zero():
    ctx = FieldContext.for_prime(5)
    with pytest.raises(ZeroDivisionError):
        ctx.zero().inv()


@given(elements_of(7), elements_of(7))
def test_norm_is_multiplicative(x, y):
    ctx = FieldContext.for_prime(7)
    a, b = ctx.elt(*x), ctx.elt(*y)
    assert (a * b).norm() == (a.norm() * b.norm()) % 7


@given(elements_of(5))
def test_inverse_and_division(x):
    ctx = FieldContext.for_prime(5)
    a = ctx.elt(*x)
    if a:
        assert a * a.inv() == ctx.one()
        assert ctx.one() / a == a.inv()


@given(elements_of(7))
def test_parse_inverts_str(x):
    ctx = FieldContext.for_prime(7)
    a = ctx.elt(*x)
    assert ctx.parse(str(a)) == a


def test_parse_rejects_garbage():
    with pytest.raises(InvalidInputError):
        FieldContext.for_prime(3).parse("1+t")


def test_mixing_fields_fails():
    with pytest.raises(InvalidInputError):
        FieldContext.for_prime(3).one() + FieldContext.for_prime(5).one()


def test_trace_and_norm_land_in_prime_field():
    ops = fq_ops(FieldContext.for_prime(5))
    for x in ops.ctx.elements():
        assert ops.conj_trace(x).in_prime_field()
        assert ops.conj_norm(x) == x * x.frob()
