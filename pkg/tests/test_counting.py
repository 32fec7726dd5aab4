import pytest

from core.config import Limits
from core.errors import BoundExceededError, ConsistencyError, InvalidInputError
from counting.degrees import check_exponent_identities, degree_exponents, degree_table
from counting.gamma import GammaInstance, gamma_count_bruteforce, gamma_count_closed, gamma_count_fast
from counting.oracle import hermitian_form, isotropic_subspace_oracle, rref_subspaces, subspace_count
from gf.field import FieldContext


@pytest.mark.parametrize("p,n,m,value", [(3, 2, 1, 27), (3, 3, 1, 243), (3, 3, 2, 6561), (5, 2, 1, 125)])
def test_brute_force_matches_closed_form(p, n, m, value):
    inst = GammaInstance.build(p, n, m)
    assert gamma_count_closed(p, n, m).value == value
    assert gamma_count_bruteforce(inst) == value
    assert gamma_count_fast(inst) == value


@pytest.mark.parametrize("p,n,m", [(3, 4, 1), (5, 3, 1), (7, 2, 1), (3, 4, 2)])
def test_fast_count_matches_closed_form(p, n, m):
    assert gamma_count_fast(GammaInstance.build(p, n, m)) == gamma_count_closed(p, n, m).value


@pytest.mark.parametrize("parts", [1, 2, 5, 9])
def test_partition_does_not_change_count(parts):
    inst = GammaInstance.build(3, 2, 1)
    assert gamma_count_bruteforce(inst, parts=parts) == 27


def test_closed_form_exponents():
    closed = gamma_count_closed(3, 4, 2)
    assert closed.exponents == (8, 2, 2)
    assert closed.value == 3 ** 12
    with pytest.raises(InvalidInputError):
        gamma_count_closed(3, 2, 2)


def test_guard_is_enforced():
    inst = GammaInstance(FieldContext.for_prime(3), 2, 1, guard=10)
    with pytest.raises(BoundExceededError):
        gamma_count_bruteforce(inst)
    with pytest.raises(BoundExceededError):
        gamma_count_fast(GammaInstance(FieldContext.for_prime(3), 2, 1, guard=8))


def test_subspace_count():
    assert subspace_count(3, 1, 9) == 91
    assert subspace_count(4, 2, 2) == 35
    assert subspace_count(5, 1, 3) == (3 ** 5 - 1) // 2


def test_rref_enumeration_matches_count():
    ctx = FieldContext.for_prime(3)
    subspaces = list(rref_subspaces(ctx, 3, 1))
    assert len(subspaces) == 91
    assert len(set(subspaces)) == 91
    assert all(s.rref()[0] == s for s in subspaces)


def test_hermitian_form():
    ctx = FieldContext.for_prime(3)
    J = hermitian_form(ctx, 3, 1)
    assert J.transpose() == J
    assert J.rank() == 4
    assert J.entry(0, 3) == ctx.one() and J.entry(1, 1) == ctx.one()


@pytest.mark.parametrize("p,n,m,value", [(3, 2, 1, 27), (5, 2, 1, 125), (3, 3, 1, 243)])
def test_isotropic_oracle(p, n, m, value):
    assert isotropic_subspace_oracle(GammaInstance.build(p, n, m)) == value


def test_oracle_without_isotropy_counts_graphs():
    assert isotropic_subspace_oracle(GammaInstance.build(3, 2, 1), isotropy=False) == 3 ** 4


def test_oracle_guard():
    with pytest.raises(BoundExceededError):
        isotropic_subspace_oracle(GammaInstance.build(3, 2, 1), limits=Limits(oracle_guard=90))


def test_degree_exponents():
    e = degree_exponents(4, 2)
    assert (e.rho, e.rho_prime, e.pi_et, e.theta, e.theta_prime) == (4, 4, 12, 4, 12)
    with pytest.raises(InvalidInputError):
        degree_exponents(2, 2)


def test_exponent_identities():
    assert check_exponent_identities(20) == 190


def test_degree_table():
    table = degree_table(3, 2, 1)
    assert (table.deg_rho, table.deg_rho_prime, table.deg_pi_et) == (3, 3, 27)
    assert table.as_dict()["deg_theta_prime"] == 27
    assert degree_table(3, 4, 2).deg_pi_et == 3 ** 12
    assert degree_table(5, 3, 2, cross_check=False).deg_rho == 5 ** 4


def test_consistency_error_carries_diff():
    error = ConsistencyError("demo.check", expected=[1, 2], actual={3})
    assert error.as_diff() == {"check": "demo.check", "expected": [1, 2], "actual": [3], "detail": None}
