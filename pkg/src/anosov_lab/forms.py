"""Pfaffian forms, Hessians and the two equivalence tests for binary forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Matrix, MultiPoly, default_variables, rational_square_class
from .lie import LieAlgebra, jz_matrix, two_step_split


@dataclass(frozen=True)
class HomogeneousForm:
    poly: MultiPoly
    degree: int

    def __post_init__(self):
        if not self.poly.is_homogeneous(self.degree):
            raise ValueError(f"{self.poly} is not homogeneous of degree {self.degree}")

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "HomogeneousForm":
        d = poly.total_degree()
        if d < 0:
            raise ValueError("the zero polynomial has no degree; pass it explicitly")
        return cls(poly, d)

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    @property
    def variables(self) -> tuple[str, ...]:
        return self.poly.variables

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __str__(self):
        return str(self.poly)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "degree": self.degree,
            "terms": self.poly.to_json_terms(),
        }


def _is_zero(x) -> bool:
    return x == 0


def pfaffian(M: Matrix):
    """Pfaffian normalized so that Pf([[0, I], [-I, 0]]) = 1.

    Entries may be rationals or polynomials.  The expansion runs along the
    first row with memoization on the remaining index set.  Odd sizes give 0.
    """
    if not M.is_square():
        raise ValueError("Pfaffian needs a square matrix")
    if not M.is_skew():
        raise ValueError("Pfaffian needs a skew-symmetric matrix")
    n = M.nrows
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)

    @lru_cache(maxsize=None)
    def pf(idx: tuple[int, ...]):
        if not idx:
            return Fraction(1)
        first, rest = idx[0], idx[1:]
        acc = Fraction(0)
        for pos, j in enumerate(rest):
            a = M[first, j]
            if _is_zero(a):
                continue
            term = a * pf(rest[:pos] + rest[pos + 1 :])
            acc = acc + term if pos % 2 == 0 else acc - term
        return acc

    value = pf(tuple(range(n)))
    m = n // 2
    return -value if (m * (m - 1) // 2) % 2 else value


def determinant(M: Matrix):
    """Division-free cofactor expansion with memoization; works over polynomial rings."""
    if not M.is_square():
        raise ValueError("determinant needs a square matrix")
    n = M.nrows

    @lru_cache(maxsize=None)
    def det(row: int, cols: tuple[int, ...]):
        if not cols:
            return Fraction(1)
        acc = Fraction(0)
        for pos, c in enumerate(cols):
            a = M[row, c]
            if _is_zero(a):
                continue
            term = a * det(row + 1, cols[:pos] + cols[pos + 1 :])
            acc = acc + term if pos % 2 == 0 else acc - term
        return acc

    return det(0, tuple(range(n)))


def pfaffian_form(L: LieAlgebra) -> HomogeneousForm:
    """f(z) = Pf(J_z restricted to V) in the coordinates of the derived algebra."""
    n1, n2 = two_step_split(L)
    variables = default_variables(n2)
    z = MultiPoly.gens(variables)
    value = pfaffian(jz_matrix(L, z))
    poly = value if isinstance(value, MultiPoly) else MultiPoly.constant(variables, value)
    return HomogeneousForm(poly, n1 // 2)


def hessian(f: HomogeneousForm | MultiPoly) -> MultiPoly:
    poly = f.poly if isinstance(f, HomogeneousForm) else f
    k = poly.nvars
    second = Matrix(
        [[poly.derivative(i).derivative(j) for j in range(k)] for i in range(k)], ncols=k
    )
    value = determinant(second)
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(poly.variables, value)


def substitute_and_scale(f: HomogeneousForm, A: Matrix, c) -> HomogeneousForm:
    """The form x -> c * f(A x)."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("scale factor must be nonzero")
    if A.shape != (f.nvars, f.nvars):
        raise ValueError(f"need a {f.nvars}x{f.nvars} matrix")
    if A.det() == 0:
        raise ValueError("substitution matrix is singular")
    return HomogeneousForm(f.poly.linear_substitute(A) * c, f.degree)


# -- binary forms -----------------------------------------------------------------


def _binary_coeffs(f: HomogeneousForm, degree: int) -> list[Fraction]:
    if f.nvars != 2:
        raise ValueError("expected a binary form")
    if f.degree != degree:
        raise ValueError(f"expected degree {degree}, got {f.degree}")
    return [f.poly.coefficient((degree - i, i)) for i in range(degree + 1)]


def binary_quadratic_class(f: HomogeneousForm) -> int | str:
    """Square-free k with f projectively equivalent to x^2 - k y^2, or "degenerate" for f = 0."""
    a, b, c = _binary_coeffs(f, 2)
    if a == b == c == 0:
        return "degenerate"
    disc = b * b - 4 * a * c
    if disc == 0:
        return 0
    return rational_square_class(disc)


def binary_form(coeffs, variables=("x", "y")) -> HomogeneousForm:
    """Binary form sum coeffs[i] x^(d-i) y^i."""
    d = len(coeffs) - 1
    return HomogeneousForm(MultiPoly(variables, {(d - i, i): c for i, c in enumerate(coeffs)}), d)


@dataclass(frozen=True)
class CubicTestResult:
    equivalent: bool
    witness: Matrix | None
    diagnostic: str

    def __bool__(self):
        return self.equivalent


def binary_cubic_xyy_test(f: HomogeneousForm) -> CubicTestResult:
    """Decide whether f(v) = (x y^2)(B v) for some rational invertible B.

    Follows the two-branch recipe: when q = r = 0 the witness is
    [[s, t], [0, 1]]; otherwise u = d/c comes from a closed formula in the
    coefficients and B = [[q, t/u^2], [1, u]].  Every witness is checked by
    exact recomposition before it is returned.
    """
    q, r, s, t = _binary_coeffs(f, 3)
    if q == 0 and r == 0:
        if s == 0:
            return CubicTestResult(False, None, "q = r = s = 0: f is a multiple of y^3")
        B = Matrix([[s, t], [0, 1]])
    else:
        den = 6 * q * s * s - r * r * s - 9 * q * r * t
        num = 9 * q * s * t + r * s * s - 6 * r * r * t
        if den == 0:
            return CubicTestResult(False, None, "denominator of d/c vanishes")
        u = num / den
        if u == 0:
            return CubicTestResult(False, None, "d/c evaluates to 0")
        B = Matrix([[q, t / (u * u)], [1, u]])
    if B.det() == 0:
        return CubicTestResult(False, None, "candidate witness is singular")
    target = binary_form([0, 0, 1, 0], f.variables)
    if target.poly.linear_substitute(B) != f.poly:
        return CubicTestResult(False, None, "candidate witness fails exact recomposition")
    return CubicTestResult(True, B, "ok")
