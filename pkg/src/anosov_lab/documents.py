"""JSON documents for algebras, matrices, polynomials and forms.

Every document carries ``"schema": "anosov-lab/1"``.  Rationals are strings
"p/q", or "p" when the denominator is 1.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .exact import Matrix, MultiPoly, UniPoly
from .lie import LieAlgebra, LieAlgebraError

SCHEMA = "anosov-lab/1"


class DocumentError(ValueError):
    """A JSON document that does not match the expected schema."""


def frac_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(s: Any) -> Fraction:
    if isinstance(s, bool):
        raise DocumentError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"not a rational: {s!r}") from None
    raise DocumentError(f"rationals must be strings or integers, got {s!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _check_schema(doc: Any, kind: str) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema {doc.get('schema')!r}, expected {SCHEMA!r}")
    if doc.get("kind", kind) != kind:
        raise DocumentError(f"expected a {kind} document, got {doc.get('kind')!r}")


# -- algebras -------------------------------------------------------------------


def algebra_to_doc(L: LieAlgebra, name: str | None = None) -> dict:
    brackets = []
    for (i, j), terms in L.structure_constants().items():
        brackets.append(
            {"i": i + 1, "j": j + 1, "terms": [{"k": k + 1, "coeff": frac_str(c)} for k, c in terms.items()]}
        )
    doc = {"schema": SCHEMA, "kind": "algebra", "dim": L.dim, "names": list(L.names), "brackets": brackets}
    if name is not None:
        doc["name"] = name
    return doc


def algebra_from_doc(doc: Any, check: bool = True) -> LieAlgebra:
    """Parse an algebra document; indices in the document are 1-based."""
    _check_schema(doc, "algebra")
    try:
        dim = doc["dim"]
        names = doc.get("names")
        raw = doc.get("brackets", [])
    except (KeyError, TypeError):
        raise DocumentError("algebra document needs 'dim' and 'brackets'") from None
    if not isinstance(dim, int) or dim < 0:
        raise DocumentError("'dim' must be a non-negative integer")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in raw:
        try:
            i, j = entry["i"], entry["j"]
            terms = entry["terms"]
        except (KeyError, TypeError):
            raise DocumentError(f"malformed bracket entry {entry!r}") from None
        if not all(isinstance(v, int) for v in (i, j)):
            raise DocumentError(f"bracket indices must be integers: {entry!r}")
        if not i < j:
            raise DocumentError(f"bracket entries need i < j, got ({i}, {j})")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise DocumentError(f"bracket index out of range: ({i}, {j})")
        if (i - 1, j - 1) in brackets:
            raise DocumentError(f"duplicate bracket ({i}, {j})")
        slot = {}
        for t in terms:
            try:
                k = t["k"]
                c = parse_rational(t["coeff"])
            except (KeyError, TypeError):
                raise DocumentError(f"malformed term {t!r}") from None
            if not isinstance(k, int) or not 1 <= k <= dim:
                raise DocumentError(f"term index out of range: {t!r}")
            slot[k - 1] = slot.get(k - 1, Fraction(0)) + c
        brackets[(i - 1, j - 1)] = slot
    try:
        return LieAlgebra(dim, brackets, names, check=check)
    except LieAlgebraError as exc:
        raise DocumentError(f"invalid Lie algebra: {exc}") from None


# -- matrices and polynomials ------------------------------------------------------


def matrix_to_doc(A: Matrix) -> dict:
    return {"schema": SCHEMA, "kind": "matrix", "rows": A.nrows, "cols": A.ncols, "entries": A.to_json()}


def matrix_from_doc(doc: Any) -> Matrix:
    if isinstance(doc, list):
        entries = doc
    else:
        _check_schema(doc, "matrix")
        entries = doc.get("entries")
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise DocumentError("matrix entries must be a list of rows")
    try:
        return Matrix([[parse_rational(x) for x in r] for r in entries])
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def poly_to_doc(p: UniPoly) -> dict:
    return {"coefficients": p.to_json(), "text": str(p)}


def form_to_doc(poly: MultiPoly, degree: int) -> dict:
    return {
        "variables": list(poly.variables),
        "degree": degree,
        "terms": poly.to_json_terms(),
        "text": str(poly),
    }
