from fractions import Fraction

import pytest

from anosov_lab.construct import catalog
from anosov_lab.construct.catalog import g_algebra, h_k, h3h5, n_k
from anosov_lab.exact import Matrix, MultiPoly
from anosov_lab.forms import (
    HomogeneousForm,
    binary_cubic_xyy_test,
    binary_form,
    binary_quadratic_class,
    determinant,
    hessian,
    pfaffian,
    pfaffian_form,
    substitute_and_scale,
)

X, Y = MultiPoly.gens(("x", "y"))
x4 = MultiPoly.gens(("x", "y", "z", "w"))


def _form(p, d):
    return HomogeneousForm(p, d)


def test_pfaffian_2x2_symbolic():
    (a,) = MultiPoly.gens(("a",))
    M = Matrix([[0, a], [-a, 0]], ncols=2)
    assert pfaffian(M) == a


def _standard_j(m: int) -> Matrix:
    n = 2 * m
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][m + i] = 1
        rows[m + i][i] = -1
    return Matrix(rows)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_pfaffian_normalization_on_standard_j(m):
    assert pfaffian(_standard_j(m)) == 1


def test_pfaffian_rejects_non_skew_and_odd_is_zero():
    with pytest.raises(ValueError):
        pfaffian(Matrix([[0, 1], [2, 0]]))
    assert pfaffian(Matrix.zeros(3, 3)) == 0


def test_pfaffian_square_is_determinant_symbolic():
    vs = MultiPoly.gens(("a", "b", "c", "d", "e", "f"))
    a, b, c, d, e, f = vs
    M = Matrix([[0, a, b, c], [-a, 0, d, e], [-b, -d, 0, f], [-c, -e, -f, 0]], ncols=4)
    assert pfaffian(M) ** 2 == determinant(M)


def test_pfaffian_form_examples():
    assert pfaffian_form(n_k(2)).poly == X**2 - 2 * Y**2
    assert pfaffian_form(g_algebra()).is_zero()
    assert pfaffian_form(h3h5()).poly == X * Y**2


def test_pfaffian_form_h_k_printed_sign():
    x, y, z, w = x4
    assert pfaffian_form(h_k(3)).poly == x * w + y**2 - 3 * z**2


def test_pfaffian_form_h_k_up_to_sign():
    # projective equivalence with c = -1; the printed sign is inconsistent with Pf(J) = 1
    x, y, z, w = x4
    for k in (1, 2, 3, -1):
        assert pfaffian_form(h_k(k)).poly == -(x * w + y**2 - k * z**2)


def test_pfaffian_form_odd_generating_layer_is_zero():
    f = pfaffian_form(catalog("f3"))
    assert f.is_zero() and f.degree == 1


def test_hessian_examples():
    for k in (1, 2, 3, -5):
        assert hessian(_form(X**2 - k * Y**2, 2)) == -4 * k
        x, y, z, w = x4
        assert hessian(_form(x * w + y**2 - k * z**2, 2)) == 4 * k
    assert hessian(_form(X**3, 3)).is_zero()


def test_substitute_and_scale_examples():
    f = _form(X**2 - Y**2, 2)
    assert substitute_and_scale(f, Matrix.identity(2), 1).poly == f.poly
    assert substitute_and_scale(f, Matrix.diagonal([1, 2]), 1).poly == X**2 - 4 * Y**2
    with pytest.raises(ValueError):
        substitute_and_scale(f, Matrix([[1, 1], [1, 1]]), 1)
    with pytest.raises(ValueError):
        substitute_and_scale(f, Matrix.identity(2), 0)
    with pytest.raises(ValueError):
        substitute_and_scale(f, Matrix.identity(3), 1)


def test_hessian_covariance_single_case():
    f = _form(X**2 * Y - 3 * Y**3 + X**3, 3)
    A = Matrix([[2, 1], [1, 1]])
    c = Fraction(3, 2)
    lhs = hessian(substitute_and_scale(f, A, c))
    rhs = hessian(f).linear_substitute(A) * (c**2 * A.det() ** 2)
    assert lhs == rhs


@pytest.mark.parametrize(
    "poly, k",
    [(X**2 - 4 * Y**2, 1), (2 * X**2 - 6 * Y**2, 3), (X**2 + Y**2, -1), (X**2 - 2 * Y**2, 2), (X * Y, 1), (X**2, 0)],
)
def test_binary_quadratic_class(poly, k):
    assert binary_quadratic_class(_form(poly, 2)) == k


def test_binary_quadratic_zero_form():
    assert binary_quadratic_class(_form(MultiPoly(("x", "y")), 2)) == "degenerate"


def test_binary_cubic_examples():
    res = binary_cubic_xyy_test(binary_form([0, 0, 1, 0]))
    assert res.equivalent and res.witness == Matrix.identity(2)
    res = binary_cubic_xyy_test(binary_form([0, 0, 1, 1]))
    assert res.equivalent and res.witness == Matrix([[1, 1], [0, 1]])
    res = binary_cubic_xyy_test(binary_form([1, 0, 0, 0]))
    assert not res.equivalent


def test_binary_cubic_general_branch():
    B = Matrix([[2, -1], [3, 5]])
    f = binary_form([0, 0, 1, 0]).poly.linear_substitute(B)
    res = binary_cubic_xyy_test(HomogeneousForm(f, 3))
    assert res.equivalent
    assert binary_form([0, 0, 1, 0]).poly.linear_substitute(res.witness) == f


def test_binary_cubic_vanishing_denominator_is_reported():
    # f = x^2 (x + y): the printed d/c formula has a zero denominator
    f = binary_form([1, 1, 0, 0])
    res = binary_cubic_xyy_test(f)
    assert not res.equivalent
    assert "denominator" in res.diagnostic


def test_binary_cubic_three_distinct_factors_not_equivalent():
    f = HomogeneousForm(X * Y * (X + Y), 3)
    assert not binary_cubic_xyy_test(f).equivalent
