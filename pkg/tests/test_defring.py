import pytest
from hypothesis import given, strategies as st

from core.errors import InvalidInputError
from gf.defring import DefRingElt, defring_ops
from gf.field import FieldContext

CTX = FieldContext.for_prime(5)
R = defring_ops(CTX, ["u", "v", "w"])

coords = st.tuples(st.integers(0, 4), st.integers(0, 4))


@st.composite
def ring_elements(draw):
    const = CTX.elt(*draw(coords))
    linear = {g: CTX.elt(*draw(coords)) for g in R.generators}
    return DefRingElt.build(const, linear)


def test_product_of_units():
    one = R.const(1)
    x = R.mul(R.add(one, R.gen("u")), R.add(one, R.gen("v")))
    assert x == R.add(R.add(one, R.gen("u")), R.gen("v"))


def test_generators_square_to_zero():
    for g in R.generators:
        assert R.mul(R.gen(g), R.gen(g)).is_zero()
    assert R.mul(R.gen("u"), R.gen("w")).is_zero()


def test_frobenius_kills_linear_part():
    x = R.add(R.const(CTX.t()), R.gen("u"))
    assert R.frob(x) == R.const(CTX.t().frob())
    assert R.frob(x).generators() == ()


def test_reduce_and_coeff():
    x = R.add(R.const(3), R.mul(R.gen("v"), R.const(2)))
    assert x.reduce() == CTX.elt(3)
    assert x.coeff("v") == CTX.elt(2)
    assert x.coeff("u") == CTX.zero()


def test_build_drops_zero_coefficients():
    x = DefRingElt.build(CTX.one(), {"v": CTX.zero(), "u": CTX.one()})
    assert x.generators() == ("u",)


def test_unknown_or_repeated_generators():
    with pytest.raises(InvalidInputError):
        R.gen("z")
    with pytest.raises(InvalidInputError):
        defring_ops(CTX, ["u", "u"])


@given(ring_elements(), ring_elements())
def test_commutative(x, y):
    assert R.mul(x, y) == R.mul(y, x)
    assert R.add(x, y) == R.add(y, x)


@given(ring_elements(), ring_elements(), ring_elements())
def test_associative_and_distributive(x, y, z):
    assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
    assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))


@given(ring_elements())
def test_additive_inverse(x):
    assert (x - x).is_zero()
    assert not bool(x - x)
