"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .unipoly import _frac_str


def default_variables(n: int) -> tuple[str, ...]:
    if n <= 4:
        return ("x", "y", "z", "w")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    """Immutable polynomial: a map from exponent tuples to nonzero Fractions.

    Terms print in graded-lexicographic order, highest first.
    """

    __slots__ = ("_vars", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], object] | None = None):
        self._vars = tuple(variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self._vars):
                raise ValueError(f"exponent vector {exps} does not match {len(self._vars)} variables")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], i: int) -> "MultiPoly":
        exps = [0] * len(variables)
        exps[i] = 1
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["MultiPoly"]:
        return [cls.var(variables, i) for i in range(len(variables))]

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def nvars(self) -> int:
        return len(self._vars)

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coefficient((0,) * self.nvars)

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other._vars != self._vars:
                raise ValueError(f"variable mismatch {self._vars} vs {other._vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self._vars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in o._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self._vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self._vars, {e: v * c for e, v in self._terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self._vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = MultiPoly.constant(self._vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self._vars, frozenset(self._terms.items())))

    # -- calculus and substitution ----------------------------------------

    def derivative(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(self._vars, terms)

    def evaluate(self, values: Sequence):
        acc = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = t * v**k
            acc = acc + t
        return acc

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable i by images[i]; images share one variable set."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].variables if images else self._vars
        acc = MultiPoly(target)
        cache: dict[tuple[int, int], MultiPoly] = {}
        for e, c in self._terms.items():
            t = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    t = t * cache[key]
            acc = acc + t
        return acc

    def linear_substitute(self, matrix) -> "MultiPoly":
        """self(M x): variable i becomes sum_j M[i, j] * x_j."""
        gens = MultiPoly.gens(self._vars)
        images = []
        for i in range(self.nvars):
            img = MultiPoly(self._vars)
            for j in range(self.nvars):
                if matrix[i, j] != 0:
                    img = img + gens[j] * matrix[i, j]
            images.append(img)
        return self.substitute(images)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self._vars}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for n, (e, c) in enumerate(self.terms()):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self._vars, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json_terms(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": _frac_str(c)} for e, c in self.terms()]
