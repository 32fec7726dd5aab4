import pytest

from core.errors import InvalidInputError
from dieudonne.canonical import canonical_M, q_subspace, vq_expected_indices, vq_image
from dieudonne.checks import (
    compositions_vanish,
    exactness,
    lattice_oracle,
    omega_subspace,
    p_zero,
    p_zero_check,
    pairing_checks,
)
from dieudonne.hasse import hasse_determinant, hasse_matrix
from dieudonne.module import omega_indices, standard_fol_module
from dieudonne.subspace import Subspace, is_balanced, map_image, map_kernel, map_preimage, span_labels, twist, type_profile
from gf.field import FieldContext

CTX = FieldContext.for_prime(3)
SWEEP = [(n, m, p) for p in (3, 5) for n in range(2, 9) for m in range(1, n)]


@pytest.fixture(scope="module")
def mod_4_2():
    return standard_fol_module(4, 2, CTX)


def test_tables_4_2(mod_4_2):
    tables = mod_4_2.tables()
    assert tables["F"]["e3"] == "-f1"
    assert tables["F"]["e4"] == "-f2"
    assert tables["F"]["e1"] == "0"
    assert tables["F"]["f1"] == "-e1"
    assert tables["F"]["f3"] == "0"
    assert tables["F"]["f5"] == "-e3"
    assert tables["V"]["e5"] == "f3"
    assert tables["V"]["e6"] == "f4"
    assert tables["V"]["f3"] == "e1"
    assert tables["V"]["f5"] == "e5"
    assert tables["V"]["f1"] == "0"


def test_pairing_entries(mod_4_2):
    gram = mod_4_2.pairing_matrix
    assert gram.entry(mod_4_2.e(1), mod_4_2.f(6)) == CTX.one()
    assert gram.entry(mod_4_2.f(6), mod_4_2.e(1)) == -CTX.one()
    assert gram.entry(mod_4_2.e(1), mod_4_2.f(5)) == CTX.zero()


def test_basis_index_bounds(mod_4_2):
    assert mod_4_2.e(1) == 0 and mod_4_2.f(1) == 6
    assert mod_4_2.label(11) == "f6"
    with pytest.raises(InvalidInputError):
        mod_4_2.e(7)


def test_bad_signature():
    with pytest.raises(InvalidInputError):
        standard_fol_module(2, 2, CTX)
    with pytest.raises(InvalidInputError):
        standard_fol_module(3, 0, CTX)


def test_kernels_4_2(mod_4_2):
    assert map_kernel(mod_4_2, "V") == Subspace.lattice(mod_4_2, 4, 2)
    ker_f = map_kernel(mod_4_2, "F")
    assert ker_f.twist == 1
    assert span_labels(mod_4_2, ker_f) == ["e1^(p)", "e2^(p)", "e5^(p)", "e6^(p)", "f3^(p)", "f4^(p)"]


def test_images_and_preimages(mod_4_2):
    image = map_image(mod_4_2, "F", twist(Subspace.lattice(mod_4_2, 4, 2)))
    assert image == Subspace.lattice(mod_4_2, 2, 2)
    # V⁻¹(D(a,0)) = D(n, a+m) para a <= n-m
    for a in range(0, 3):
        pre = map_preimage(mod_4_2, "V", twist(Subspace.lattice(mod_4_2, a, 0)))
        assert pre == Subspace.lattice(mod_4_2, 4, a + 2)


def test_twist_rules(mod_4_2):
    sub = Subspace.lattice(mod_4_2, 1, 1)
    once = twist(sub)
    assert once.twist == 1
    assert once.coordinate_indices() == sub.coordinate_indices()
    assert span_labels(mod_4_2, twist(once)) == ["e1^(p²)", "f1^(p²)"]
    with pytest.raises(InvalidInputError):
        map_image(mod_4_2, "F", sub)
    with pytest.raises(InvalidInputError):
        map_preimage(mod_4_2, "V", sub)
    with pytest.raises(InvalidInputError):
        twist(twist(once))


def test_subspace_algebra(mod_4_2):
    a = Subspace.lattice(mod_4_2, 3, 1)
    b = Subspace.lattice(mod_4_2, 2, 4)
    assert a.intersect(b) == Subspace.lattice(mod_4_2, 2, 1)
    assert (a + b) == Subspace.lattice(mod_4_2, 3, 4)
    assert (a + b).contains(a)
    assert type_profile(a) == (3, 1)
    assert not is_balanced(a)
    assert is_balanced(Subspace.lattice(mod_4_2, 2, 2))


def test_non_coordinate_labels(mod_4_2):
    rows = mod_4_2.unit_rows([0]) + mod_4_2.unit_rows([6])
    sub = Subspace.span(rows)
    assert sub.coordinate_indices() is None
    assert not sub.is_graded()
    assert span_labels(mod_4_2, sub) == ["(1+0*t)e1 + (1+0*t)f1"]


@pytest.mark.parametrize("n,m,p", SWEEP)
def test_structure_checks(n, m, p):
    mod = standard_fol_module(n, m, FieldContext.for_prime(p))
    for result in (exactness(mod), compositions_vanish(mod), pairing_checks(mod), p_zero_check(mod)):
        assert result["is_valid"], result["warnings"]
    assert type_profile(omega_subspace(mod)) == (n, m)
    assert p_zero(mod).dim == n - m
    assert omega_subspace(mod) == Subspace.of_indices(mod, omega_indices(mod))


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (5, 4)])
def test_lattice_tables_match_matrices(n, m):
    result = lattice_oracle(standard_fol_module(n, m, CTX))
    assert result["is_valid"], result["warnings"][:3]
    assert result["checked"] == 2 * (n + m + 1) ** 2


def test_hasse_matrix():
    assert hasse_matrix(4, 2, CTX).is_zero()
    assert hasse_matrix(2, 1, CTX).is_zero()
    small = hasse_matrix(3, 2, CTX)
    assert not small.is_zero()
    assert small.rank() == 1
    assert hasse_determinant(3, 2, CTX) == CTX.zero()


@pytest.mark.parametrize("n,m,p", SWEEP)
def test_hasse_zero_iff_2m_le_n(n, m, p):
    ctx = FieldContext.for_prime(p)
    assert hasse_matrix(n, m, ctx).is_zero() == (2 * m <= n)
    assert hasse_determinant(n, m, ctx) == ctx.zero()


@pytest.mark.parametrize("n,m,p", SWEEP)
def test_vq_image_span(n, m, p):
    ctx = FieldContext.for_prime(p)
    image = vq_image(n, m, ctx)
    assert image.twist == 1
    assert image.coordinate_indices() == vq_expected_indices(standard_fol_module(n, m, ctx))


def test_vq_image():
    assert vq_image(4, 2, CTX).coordinate_indices() == [0, 1]
    assert vq_image(3, 2, CTX).coordinate_indices() == [0, 3]
    assert vq_image(4, 2, CTX).twist == 1


def test_q_subspace(mod_4_2):
    assert span_labels(mod_4_2, q_subspace(mod_4_2)) == ["f3", "f4"]


@pytest.mark.parametrize("n,m,expected", [(4, 2, [0, 1]), (3, 2, [0, 1, 2, 3]), (5, 2, [0, 1]), (4, 3, [0, 1, 2, 3, 4, 5])])
def test_canonical_M(n, m, expected):
    piece = canonical_M(n, m, FieldContext.for_prime(5))
    assert piece.coordinate_indices() == expected
    assert piece.twist == 0
