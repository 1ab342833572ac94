"""Dense univariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Immutable polynomial stored as coefficients from low to high degree.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def lc(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [c.numerator for c in self._c]

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self._c), len(other._c))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self._c)

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = UniPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(rem) - len(other._c)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        inv_lc = 1 / other.lc
        m = len(other._c)
        for i in range(dq, -1, -1):
            c = rem[i + m - 1] * inv_lc
            quot[i] = c
            if c:
                for j, b in enumerate(other._c):
                    rem[i + j] -= c * b
        return UniPoly(quot), UniPoly(rem[: m - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    # -- derived polynomials ----------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self._c) if i)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UniPoly(c * inv for c in self._c)

    def reversal(self) -> "UniPoly":
        """x^deg * p(1/x)."""
        return UniPoly(reversed(self._c))

    def shift_scale(self, a, b) -> "UniPoly":
        """p(a*x + b)."""
        lin = UniPoly((b, a))
        acc = UniPoly()
        for c in reversed(self._c):
            acc = acc * lin + c
        return acc

    def compose(self, q: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self._c):
            acc = acc * q + c
        return acc

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive with integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        den = lcm(*(c.denominator for c in self._c))
        num = 0
        for c in self._c:
            num = gcd(num, (c * den).numerator)
        return Fraction(num, den)

    def primitive(self) -> "UniPoly":
        """Integer primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return UniPoly(x / c for x in self._c)

    def square_free(self) -> "UniPoly":
        """Product of the distinct irreducible factors, made monic."""
        if self.degree <= 0:
            return UniPoly((1,)) if not self.is_zero() else self
        return self.exact_div(poly_gcd(self, self.derivative())).monic()

    def is_square_free(self) -> bool:
        return poly_gcd(self, self.derivative()).degree == 0

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self._c]})"

    def __str__(self):
        return self.format("x")

    def format(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [_frac_str(c) for c in self._c]


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _lift(x) -> UniPoly | None:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly((x,))
    return None


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic pairwise coprime square-free factors with multiplicities."""
    if p.degree <= 0:
        return []
    p = p.monic()
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def chebyshev_reduce(g: UniPoly) -> UniPoly:
    """For palindromic g of degree 2m, return q with g(x) = x^m * q(x + 1/x)."""
    if g.degree % 2:
        raise ValueError("a palindromic reduction needs even degree")
    c = g.coeffs
    if tuple(reversed(c)) != c:
        raise ValueError(f"{g} is not palindromic")
    m = g.degree // 2
    t = UniPoly.x()
    # D_0 = 2, D_1 = t, D_{j+1} = t D_j - D_{j-1}: x^j + x^-j = D_j(x + 1/x)
    d_prev, d_cur = UniPoly((2,)), t
    q = UniPoly((c[m],))
    for j in range(1, m + 1):
        q = q + c[m + j] * d_cur
        d_prev, d_cur = d_cur, t * d_cur - d_prev
    return q


def companion(p: UniPoly) -> list[list[Fraction]]:
    """Companion matrix of monic p acting by multiplication by x on 1, x, ..., x^(n-1)."""
    p = p.monic()
    n = p.degree
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = Fraction(1)
    for i in range(n):
        m[i][n - 1] = -p.coeff(i)
    return m

