"""Immutable dense matrices over exact fields.

Entries are ``Fraction`` values by default (ints are promoted).  Any other
exact field element with the usual operators, such as
``QuadFieldElement``, also works; ring-valued entries (multivariate
polynomials) support everything except elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .quadfield import QuadFieldElement
from .unipoly import UniPoly


def _promote(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return x


class Matrix:
    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_promote(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged matrix rows")
        else:
            width = ncols or 0
        self._rows = data
        self._nrows = len(data)
        self._ncols = width

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            return cls([])
        return cls(list(zip(*cols)))

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.nrows
            c0 += b.ncols
        return cls(out, ncols=m)

    # -- access -----------------------------------------------------------

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self._nrows, self._ncols

    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self._ncols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self._rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self._rows], ncols=self._ncols)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._rows)), ncols=self._nrows) if self._rows else Matrix.zeros(self._ncols, 0)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self):
        self._require_square()
        acc = Fraction(0)
        for i in range(self._nrows):
            acc = acc + self._rows[i][i]
        return acc

    # -- predicates -------------------------------------------------------

    def is_rational(self) -> bool:
        return all(
            isinstance(x, Fraction) or (isinstance(x, QuadFieldElement) and x.is_rational())
            for r in self._rows
            for x in r
        )

    def to_rational(self) -> "Matrix":
        """Same matrix with every entry as a Fraction; fails on irrational entries."""
        def conv(x):
            if isinstance(x, Fraction):
                return x
            if isinstance(x, QuadFieldElement):
                return x.to_fraction()
            raise TypeError(f"cannot convert {x!r} to a rational")

        return self.map(conv)

    def is_integral(self) -> bool:
        return all(isinstance(x, Fraction) and x.denominator == 1 for r in self._rows for x in r)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_skew(self) -> bool:
        if not self.is_square():
            return False
        n = self._nrows
        return all(self._rows[i][j] + self._rows[j][i] == 0 for i in range(n) for j in range(i, n))

    # -- arithmetic -------------------------------------------------------

    def _require_square(self):
        if not self.is_square():
            raise ValueError(f"expected a square matrix, got {self._nrows}x{self._ncols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], ncols=self._ncols
        )

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self._ncols != other._nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix([[_dot(r, c) for c in cols] for r in self._rows], ncols=other._ncols)
        if isinstance(other, (list, tuple)):
            if len(other) != self._ncols:
                raise ValueError("vector length mismatch")
            return tuple(_dot(r, other) for r in self._rows)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        if isinstance(other, (list, tuple)):
            return self @ other
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def __pow__(self, e: int) -> "Matrix":
        self._require_square()
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Matrix.identity(self._nrows), self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for r in self._rows:
            for s in other._rows:
                out.append([a * b for a in r for b in s])
        return Matrix(out, ncols=self._ncols * other._ncols)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the pivot columns."""
        m = [list(r) for r in self._rows]
        pivots: list[int] = []
        r = 0
        for c in range(self._ncols):
            p = next((i for i in range(r, self._nrows) if m[i][c] != 0), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self._nrows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self._nrows:
                break
        return Matrix(m, ncols=self._ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[tuple]:
        """Basis of the right null space, one vector per free column."""
        red, pivots = self.rref()
        free = [c for c in range(self._ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self._ncols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -red[i, f]
            basis.append(tuple(v))
        return basis

    def det(self):
        self._require_square()
        n = self._nrows
        m = [list(r) for r in self._rows]
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            piv = m[c][c]
            det = det * piv
            inv = 1 / piv
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self) -> "Matrix":
        self._require_square()
        n = self._nrows
        aug = Matrix([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self._rows)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def solve(self, b: Sequence) -> tuple:
        """Unique solution x of self @ x = b for invertible self."""
        return tuple(self.inverse() @ tuple(b))

    def charpoly(self) -> UniPoly:
        """det(xI - M) by the Faddeev-LeVerrier recursion (characteristic zero)."""
        self._require_square()
        m = self.to_rational()
        n = m.nrows
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        ident = Matrix.identity(n)
        acc = Matrix.zeros(n, n)
        for k in range(1, n + 1):
            acc = m @ acc + ident * coeffs[n - k + 1]
            coeffs[n - k] = -(m @ acc).trace() / k
        return UniPoly(coeffs)

    # -- display / serialization -------------------------------------------

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self._rows]})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._rows]
        if not cells:
            return "[]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def to_json(self) -> list[list[str]]:
        from .unipoly import _frac_str

        return [[_frac_str(x) for x in r] for r in self.to_rational()._rows]


def _dot(r: Sequence, c: Sequence):
    acc = None
    for a, b in zip(r, c):
        if a == 0 or b == 0:
            continue
        t = a * b
        acc = t if acc is None else acc + t
    return Fraction(0) if acc is None else acc


def charpoly(m: Matrix) -> UniPoly:
    return m.charpoly()


RationalMatrix = Matrix
