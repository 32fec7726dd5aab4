import pytest

from core.errors import InvalidInputError
from gf.derivation import Poly2V, VectorField2V, d_dy_field, euler_x, example_field, p_power_of_derivation


@pytest.mark.parametrize("p", [3, 5, 7])
def test_p_power_matches_euler_field(p):
    result = p_power_of_derivation(p, 2 * p)
    assert result.passed
    assert len(result.checks) == (2 * p + 1) * (2 * p + 2) // 2
    assert not result.example_p_closed
    assert result.d_dy_p_closed


@pytest.mark.parametrize("p", [3, 5])
def test_compose_power_of_example(p):
    bound = 2 * p
    assert example_field(p, bound).compose_power() == euler_x(p, bound)
    assert d_dy_field(p, bound).compose_power().is_zero()


def test_example_on_monomial():
    p, bound = 3, 6
    xi = example_field(p, bound)
    f = Poly2V.monomial(p, bound, 2, 1)
    # x∂x(x²y) + ∂y(x²y) = 2x²y + x²
    assert xi.apply(f) == Poly2V.build(p, bound, {(2, 1): 2, (2, 0): 1})


def test_bracket_with_d_dy_vanishes():
    p, bound = 5, 10
    assert example_field(p, bound).lie_bracket(d_dy_field(p, bound)).is_zero()


def test_euler_field_is_p_closed():
    assert euler_x(3, 6).is_p_closed_line()


def test_degree_overflow_and_bad_input():
    with pytest.raises(InvalidInputError):
        Poly2V.monomial(3, 2, 2, 1)
    with pytest.raises(InvalidInputError):
        p_power_of_derivation(4, 8)
    with pytest.raises(InvalidInputError):
        p_power_of_derivation(5, 4)


def test_wedge_detects_collinear_fields():
    p, bound = 3, 6
    x = Poly2V.monomial(p, bound, 1, 0)
    field = VectorField2V(x, Poly2V.zero(p, bound))
    assert field.wedge(euler_x(p, bound)).is_zero()
