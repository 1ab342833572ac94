"""Lie algebras over Q given by structure constants on a fixed basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..exact import Matrix


class LieAlgebraError(ValueError):
    """Structure constants that do not define a Lie algebra."""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    triple: tuple[int, int, int] | None = None
    jacobiator: tuple[tuple[int, Fraction], ...] = ()
    message: str = ""

    def __bool__(self):
        return self.ok


Brackets = Mapping[tuple[int, int], Mapping[int, object]]


def _normalize(dim: int, brackets: Brackets) -> dict[tuple[int, int], dict[int, Fraction]]:
    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise LieAlgebraError(f"bracket index ({i}, {j}) out of range for dimension {dim}")
        if i == j:
            if any(Fraction(c) for c in terms.values()):
                raise LieAlgebraError(f"[e{i}, e{i}] must vanish")
            continue
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        slot = out.setdefault((i, j), {})
        for k, c in terms.items():
            if not 0 <= k < dim:
                raise LieAlgebraError(f"bracket target {k} out of range for dimension {dim}")
            slot[k] = slot.get(k, Fraction(0)) + sign * Fraction(c)
    return {
        key: {k: c for k, c in sorted(terms.items()) if c}
        for key, terms in sorted(out.items())
        if any(terms.values())
    }


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    ``brackets`` maps a pair (i, j) of 0-based basis indices to the
    coordinates of [e_i, e_j].  Only i < j is stored; pairs given in the
    other order are folded in with a sign.  The Jacobi identity and
    nilpotency are checked unless ``check=False``.
    """

    __slots__ = ("_dim", "_names", "_c")

    def __init__(
        self,
        dim: int,
        brackets: Brackets | None = None,
        names: Sequence[str] | None = None,
        check: bool = True,
    ):
        if dim < 0:
            raise LieAlgebraError("dimension must be non-negative")
        self._dim = dim
        self._names = tuple(names) if names is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self._names) != dim:
            raise LieAlgebraError(f"{len(self._names)} names for dimension {dim}")
        if len(set(self._names)) != dim:
            raise LieAlgebraError("basis names must be distinct")
        self._c = _normalize(dim, brackets or {})
        if check:
            report = validate(self)
            if not report.ok:
                raise LieAlgebraError(report.message)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def structure_constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {key: dict(v) for key, v in self._c.items()}

    def c(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self._c.get((i, j), {}).get(k, Fraction(0))
        return -self._c.get((j, i), {}).get(k, Fraction(0))

    def basis_bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self._dim
        if i == j:
            return tuple(out)
        sign = 1 if i < j else -1
        for k, c in self._c.get((min(i, j), max(i, j)), {}).items():
            out[k] = sign * c
        return tuple(out)

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        """[u, v] for coordinate vectors; entries may lie in any field containing Q."""
        out = [Fraction(0)] * self._dim
        for (i, j), terms in self._c.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef == 0:
                continue
            for k, c in terms.items():
                out[k] = out[k] + coef * c
        return tuple(out)

    def ad(self, u: Sequence) -> Matrix:
        cols = [self.bracket(u, _unit(self._dim, j)) for j in range(self._dim)]
        return Matrix.from_columns(cols) if cols else Matrix([])

    def is_abelian(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for t in self._c.values() for c in t.values())

    def renamed(self, names: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self._dim, self._c, names, check=False)

    def restrict(self, indices: Sequence[int]) -> "LieAlgebra":
        """Subalgebra spanned by a subset of basis vectors closed under the bracket."""
        pos = {old: new for new, old in enumerate(indices)}
        brackets = {}
        for (i, j), terms in self._c.items():
            if i in pos and j in pos:
                if any(k not in pos for k in terms):
                    raise LieAlgebraError("basis subset is not closed under the bracket")
                brackets[(pos[i], pos[j])] = {pos[k]: c for k, c in terms.items()}
        return LieAlgebra(len(indices), brackets, [self._names[i] for i in indices], check=False)

    def same_structure(self, other: "LieAlgebra") -> bool:
        return self._dim == other._dim and self._c == other._c

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.same_structure(other) and self._names == other._names

    def __hash__(self):
        return hash((self._dim, self._names, tuple((k, tuple(v.items())) for k, v in self._c.items())))

    def describe_brackets(self) -> list[str]:
        lines = []
        for (i, j), terms in self._c.items():
            rhs = _linear_combination(terms, self._names)
            lines.append(f"[{self._names[i]}, {self._names[j]}] = {rhs}")
        return lines

    def __repr__(self):
        return f"LieAlgebra(dim={self._dim}, " + "; ".join(self.describe_brackets()) + ")"


def _unit(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def _linear_combination(terms: Mapping[int, Fraction], names: Sequence[str]) -> str:
    out = ""
    for n, (k, c) in enumerate(sorted(terms.items())):
        mag = abs(c)
        body = names[k] if mag == 1 else f"{mag}*{names[k]}"
        if n == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def validate(L: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity on every basis triple, then nilpotency."""
    n = L.dim
    basis = [_unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ij = L.basis_bracket(i, j)
            for k in range(j + 1, n):
                jk = L.basis_bracket(j, k)
                ki = L.basis_bracket(k, i)
                total = [
                    a + b + c
                    for a, b, c in zip(L.bracket(ij, basis[k]), L.bracket(jk, basis[i]), L.bracket(ki, basis[j]))
                ]
                if any(total):
                    bad = tuple((m, v) for m, v in enumerate(total) if v)
                    names = L.names
                    msg = (
                        f"Jacobi identity fails on ({names[i]}, {names[j]}, {names[k]}): "
                        + ", ".join(f"{names[m]}: {v}" for m, v in bad)
                    )
                    return ValidationReport(False, (i, j, k), bad, msg)
    from .structure import NotNilpotentError, lower_central_series

    try:
        lower_central_series(L)
    except NotNilpotentError as exc:
        return ValidationReport(False, message=f"not nilpotent: {exc}")
    return ValidationReport(True, message="ok")


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, [f"A{i + 1}" for i in range(n)])


def standard_names(type_tuple: Sequence[int]) -> list[str]:
    """X1..Xn1 for the first layer and Z1, Z2, ... for everything below it."""
    if not type_tuple:
        return []
    n1 = type_tuple[0]
    rest = sum(type_tuple[1:])
    return [f"X{i + 1}" for i in range(n1)] + [f"Z{i + 1}" for i in range(rest)]
