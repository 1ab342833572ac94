"""Cross-checks against independent implementations (sympy, mpmath, numpy)."""

import random
from fractions import Fraction
from math import isqrt

import mpmath
import numpy as np
import pytest
import sympy

from anosov_lab.certify import is_hyperbolic, signature, verify_anosov
from anosov_lab.construct import graded_sum, hk_automorphism
from anosov_lab.construct.catalog import heisenberg
from anosov_lab.exact import Matrix, MultiPoly, count_roots_inside_unit_disk, is_square_free, pell_fundamental
from anosov_lab.forms import HomogeneousForm, hessian, pfaffian, substitute_and_scale

MARGIN = mpmath.mpf("1e-20")


def sym_matrix(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in row] for row in M.rows()])


def numeric_unit_circle(rows):
    """(has a root on the circle, roots inside counted with multiplicity) from sympy + mpmath."""
    lam = sympy.Symbol("lam")
    p = sympy.Matrix(rows).charpoly(lam).as_expr()
    on_circle, inside = False, 0
    _, parts = sympy.sqf_list(sympy.Poly(p, lam))
    for factor, mult in parts:
        coeffs = [int(c) for c in factor.all_coeffs()]
        if len(coeffs) == 1:
            continue
        with mpmath.workdps(60):
            roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=400)
            for r in roots:
                gap = abs(r) - 1
                if abs(gap) < MARGIN:
                    on_circle = True
                elif gap < 0:
                    inside += mult
    return on_circle, inside


def test_hyperbolicity_against_numeric_roots():
    rng = random.Random(20240611)
    checked = 0
    for _ in range(1000):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        on_circle, inside = numeric_unit_circle(rows)
        A = Matrix(rows)
        ev = is_hyperbolic(A)
        assert bool(ev) is (not on_circle), rows
        if ev:
            assert count_roots_inside_unit_disk(ev.charpoly) == inside, rows
        checked += 1
    assert checked == 1000


def test_charpoly_against_sympy():
    rng = random.Random(7)
    lam = sympy.Symbol("x")
    for _ in range(100):
        n = rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        ours = Matrix(rows).charpoly()
        theirs = sympy.Poly(sym_matrix(Matrix(rows)).charpoly(lam).as_expr(), lam).all_coeffs()
        assert [Fraction(str(c)) for c in reversed(theirs)] == list(ours.coeffs)


def random_skew(rng, size):
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            rows[i][j], rows[j][i] = v, -v
    return Matrix(rows)


@pytest.mark.parametrize("size", [6, 8])
def test_pfaffian_squared_is_sympy_determinant(size):
    rng = random.Random(size)
    for _ in range(50):
        M = random_skew(rng, size)
        det = sym_matrix(M).det()
        assert pfaffian(M) ** 2 == Fraction(int(det.p), int(det.q))


def to_sympy(poly: MultiPoly, symbols):
    return sympy.sympify(str(poly).replace("^", "**"), locals=dict(zip(poly.variables, symbols)))


def random_form(rng, nvars, degree):
    gens = MultiPoly.gens(("x", "y", "z")[:nvars])
    f = MultiPoly(gens[0].variables)
    monos = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    for i, j in monos:
        if nvars == 2 and j != degree - i:
            continue
        k = degree - i - j
        term = gens[0] ** i * gens[1] ** j
        if nvars == 3:
            term = term * gens[2] ** k
        f = f + term * rng.randint(-3, 3)
    return HomogeneousForm(f, degree)


def test_hessian_covariance_against_sympy():
    rng = random.Random(99)
    done = 0
    while done < 100:
        nvars = rng.choice([2, 3])
        degree = rng.choice([2, 3]) if nvars == 2 else 2
        f = random_form(rng, nvars, degree)
        if f.is_zero():
            continue
        A = Matrix([[rng.randint(-2, 2) for _ in range(nvars)] for _ in range(nvars)])
        if A.det() == 0:
            continue
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
        syms = sympy.symbols(f.poly.variables)
        g = substitute_and_scale(f, A, c)
        # independent Hessian of the transformed form
        expr = to_sympy(g.poly, syms)
        theirs = sympy.expand(sympy.hessian(expr, syms).det())
        assert sympy.expand(to_sympy(hessian(g), syms) - theirs) == 0
        # covariance: H(c f o A) = c^n det(A)^2 (H f) o A
        rhs = hessian(f).linear_substitute(A) * (c**nvars * A.det() ** 2)
        assert hessian(g) == rhs
        done += 1


def pell_brute(k):
    y = 1
    while True:
        x2 = 1 + k * y * y
        x = isqrt(x2)
        if x * x == x2:
            return x, y
        y += 1


@pytest.mark.parametrize("k", [k for k in range(2, 51) if is_square_free(k)])
def test_pell_against_brute_force(k):
    assert pell_fundamental(k) == pell_brute(k)


def test_hk_signature_numerically():
    A = hk_automorphism(2, 3, 2, 3).automorphism
    eig = np.linalg.eigvals(np.array([[float(e) for e in row] for row in A.rows()]))
    outside = int(np.sum(np.abs(eig) > 1))
    assert outside == 5
    s = signature(A, is_hyperbolic(A))
    assert s.expanding == outside


def test_graded_sum_signature_numerically():
    gs = graded_sum(heisenberg(3), (1, 1, 2), Matrix([[2, 1], [1, 1]]))
    cert = verify_anosov(gs.algebra, gs.automorphism)
    eig = np.linalg.eigvals(np.array([[float(e) for e in row] for row in gs.automorphism.rows()]))
    assert cert.signature.expanding == int(np.sum(np.abs(eig) > 1)) == 3
