"""Explicit bases over Q(sqrt k) exhibiting the catalog rational forms.

Each family lives inside a split real algebra (h3+h3, h, l4+l4).  A basis
whose vectors mix the two halves with factors sqrt k spans a subalgebra
with rational structure constants; in that basis the brackets are exactly
those of the catalog algebra n_k, h_k or l_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import Matrix, QuadFieldElement, is_square_free
from ..lie import LieAlgebra, change_basis, direct_sum
from .catalog import h_algebra, h_k, heisenberg, l_k, n_k

FAMILIES = ("h3h3", "h", "l4l4")


def l4_pair() -> LieAlgebra:
    """l4 + l4 with generators X1, X2 (one per copy) and X3, X4 their partners."""
    names = ["X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "Z4"]
    return LieAlgebra(8, {(0, 2): {4: 1}, (1, 3): {5: 1}, (0, 4): {6: 1}, (1, 5): {7: 1}}, names)


def _sqrt(k: int):
    return Fraction(1) if k == 1 else QuadFieldElement.sqrt(k)


def _vec(n: int, **coords) -> list:
    v = [Fraction(0)] * n
    for key, c in coords.items():
        v[int(key[1:])] = c
    return v


def _basis(family: str, r) -> list[list]:
    """Witness vectors in ambient coordinates; r is sqrt k (or any square root of a positive integer)."""
    if family == "h3h3":
        # X1, X2, X3, X4, Z1, Z2 with [X1,X2] = Z1, [X3,X4] = Z2
        return [
            _vec(6, e0=1, e2=1), _vec(6, e0=r, e2=-r), _vec(6, e1=r, e3=r),
            _vec(6, e1=1, e3=-1), _vec(6, e4=r, e5=r), _vec(6, e4=1, e5=-1),
        ]
    if family == "h":
        # [X1,X3] = Z1, [X1,X4] = Z2, [X2,X3] = Z3, [X2,X4] = Z4
        return [
            _vec(8, e0=r, e2=-r), _vec(8, e0=1, e2=1), _vec(8, e1=1, e3=1), _vec(8, e1=r, e3=-r),
            _vec(8, e4=2 * r), _vec(8, e5=r, e6=r), _vec(8, e5=-1, e6=1), _vec(8, e7=-2 * r),
        ]
    # l4 + l4 in the pairing of l4_pair()
    out = []
    for a, b in ((0, 1), (2, 3), (4, 5), (6, 7)):
        out.append(_vec(8, **{f"e{a}": 1, f"e{b}": 1}))
        out.append(_vec(8, **{f"e{a}": r, f"e{b}": -r}))
    return out


def ambient(family: str) -> LieAlgebra:
    if family == "h3h3":
        return direct_sum(heisenberg(3), heisenberg(3))
    if family == "h":
        return h_algebra()
    if family == "l4l4":
        return l4_pair()
    raise ValueError(f"unknown witness family {family!r}; expected one of {FAMILIES}")


def witness_matrix(family: str, root) -> Matrix:
    """Columns are the witness vectors for the given square root."""
    if family not in FAMILIES:
        raise ValueError(f"unknown witness family {family!r}; expected one of {FAMILIES}")
    return Matrix.from_columns(_basis(family, root))


@dataclass(frozen=True)
class SqrtFormWitness:
    family: str
    k: int
    ambient: LieAlgebra
    basis: Matrix
    algebra: LieAlgebra
    target: LieAlgebra
    matches: bool

    def to_json(self) -> dict:
        from ..documents import SCHEMA, algebra_to_doc

        return {
            "schema": SCHEMA,
            "kind": "witness",
            "family": self.family,
            "k": self.k,
            "basis": [[str(x) for x in col] for col in self.basis.columns()],
            "algebra": algebra_to_doc(self.algebra),
            "matches_catalog": self.matches,
        }


_TARGETS = {"h3h3": n_k, "h": h_k, "l4l4": l_k}


def sqrt_form_witness(family: str, k: int) -> SqrtFormWitness:
    """Transport the ambient bracket to the sqrt k basis and compare with the catalog.

    change_basis raises if any structure constant is irrational, so a
    returned witness always spans a rational form.
    """
    if not isinstance(k, int) or k < 1 or not is_square_free(k):
        raise ValueError(f"k must be a positive square-free integer, got {k!r}")
    L = ambient(family)
    P = witness_matrix(family, _sqrt(k))
    target = _TARGETS[family](k)
    transported = change_basis(L, P, names=target.names)
    return SqrtFormWitness(family, k, L, P, transported, target, transported == target)


def transport(family: str, root, ambient_map: Matrix) -> Matrix:
    """Matrix of an ambient automorphism in the witness basis, as a rational matrix."""
    P = witness_matrix(family, root)
    return (P.inverse() @ ambient_map @ P).to_rational()


__all__ = [
    "FAMILIES",
    "SqrtFormWitness",
    "ambient",
    "l4_pair",
    "sqrt_form_witness",
    "transport",
    "witness_matrix",
]
