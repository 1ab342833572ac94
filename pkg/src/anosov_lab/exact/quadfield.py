"""Elements a + b*sqrt(k) of a real or imaginary quadratic field Q(sqrt k)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


class QuadFieldElement:
    """Immutable value a + b*sqrt(k) with rational a, b.

    Mixed arithmetic with ``int`` and ``Fraction`` is supported; those embed
    as elements with b = 0.  Two elements can only be combined when they
    share the same k.
    """

    __slots__ = ("_k", "_a", "_b")

    def __init__(self, a, b=0, k: int = 2):
        if not isinstance(k, int) or k in (0, 1):
            raise ValueError(f"k must be an integer other than 0 and 1, got {k!r}")
        from .numtheory import square_free_part

        if square_free_part(k)[1] != 1:
            raise ValueError(f"k must be square-free, got {k}")
        self._k = k
        self._a = _as_fraction(a)
        self._b = _as_fraction(b)

    @classmethod
    def sqrt(cls, k: int) -> "QuadFieldElement":
        return cls(0, 1, k)

    @property
    def k(self) -> int:
        return self._k

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b:
            raise ValueError(f"{self} is irrational")
        return self._a

    def conjugate(self) -> "QuadFieldElement":
        return QuadFieldElement(self._a, -self._b, self._k)

    def norm(self) -> Fraction:
        return self._a * self._a - self._k * self._b * self._b

    def trace(self) -> Fraction:
        return 2 * self._a

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(k); only defined for k > 1."""
        if self._k < 0:
            raise ValueError("sign is undefined in an imaginary quadratic field")
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with k b^2
        diff = a * a - self._k * b * b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "QuadFieldElement | None":
        if isinstance(other, QuadFieldElement):
            if other._k != self._k:
                raise ValueError(f"mixing Q(sqrt {self._k}) with Q(sqrt {other._k})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadFieldElement(other, 0, self._k)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self._a + o._a, self._b + o._b, self._k)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElement(-self._a, -self._b, self._k)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self._a - o._a, self._b - o._b, self._k)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, o._a, o._b
        return QuadFieldElement(a * c + self._k * b * d, a * d + b * c, self._k)

    __rmul__ = __mul__

    def inverse(self) -> "QuadFieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadFieldElement(self._a / n, -self._b / n, self._k)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadFieldElement(1, 0, self._k)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison and hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadFieldElement):
            return (self._k, self._a, self._b) == (other._k, other._a, other._b) or (
                self._b == 0 and other._b == 0 and self._a == other._a
            )
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._k, self._a, self._b))

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __repr__(self):
        return f"QuadFieldElement({self._a}, {self._b}, k={self._k})"

    def __str__(self):
        if self._b == 0:
            return str(self._a)
        root = f"sqrt({self._k})"
        b = self._b
        if b == 1:
            rad = root
        elif b == -1:
            rad = f"-{root}"
        else:
            rad = f"{b}*{root}"
        if self._a == 0:
            return rad
        sep = " - " if rad.startswith("-") else " + "
        return f"{self._a}{sep}{rad.lstrip('-')}"


def quad_norm_and_conjugate(z: QuadFieldElement) -> tuple[QuadFieldElement, Fraction]:
    """Return (conjugate, norm) of z."""
    return z.conjugate(), z.norm()


def sqrt_of_integer(n: int):
    """Exact square root of a nonzero integer as q*sqrt(k), or a plain Fraction when n is a square."""
    from .numtheory import square_free_part

    k, q = square_free_part(n)
    if k == 1:
        return Fraction(q)
    if k == 0:
        return Fraction(0)
    return QuadFieldElement(0, q, k)
