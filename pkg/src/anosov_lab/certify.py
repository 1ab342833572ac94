"""Exact certification of Anosov automorphisms and the obstructions that rule them out.

Nothing here touches floating point.  Hyperbolicity goes through the
reversal gcd of the characteristic polynomial: a root on the unit circle
is either +-1 or comes paired with its inverse, so it divides
gcd(p, reversal(p)).  That gcd is palindromic and reduces under
t = x + 1/x to a polynomial whose roots on the circle land in [-2, 2],
which Sturm counts exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .documents import SCHEMA, algebra_to_doc, frac_str, poly_to_doc
from .exact import (
    Matrix,
    UniPoly,
    chebyshev_reduce,
    count_roots_inside_unit_disk,
    factor_over_Z,
    pell_fundamental,
    poly_gcd,
    sturm_closed_count,
)
from .forms import binary_quadratic_class, pfaffian_form
from .lie import (
    LieAlgebra,
    conforms_to_series_basis,
    is_homomorphism,
    max_abelian_factor,
    type_of,
)


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    OBSTRUCTED = "OBSTRUCTED"
    INAPPLICABLE = "INAPPLICABLE"
    DEFERRED = "DEFERRED"


# -- the three predicates -------------------------------------------------------------


def is_automorphism(L: LieAlgebra, A: Matrix) -> bool:
    if A.shape != (L.dim, L.dim):
        raise ValueError(f"matrix of shape {A.shape} does not act on an algebra of dimension {L.dim}")
    return A.det() != 0 and is_homomorphism(L, L, A)


@dataclass(frozen=True)
class UnimodularityEvidence:
    charpoly: UniPoly
    integral: bool
    constant_term: Fraction
    unimodular: bool

    def __bool__(self):
        return self.unimodular

    def to_json(self) -> dict:
        return {
            "charpoly": poly_to_doc(self.charpoly),
            "integral": self.integral,
            "constant_term": frac_str(self.constant_term),
            "unimodular": self.unimodular,
        }


def is_unimodular(A: Matrix) -> UnimodularityEvidence:
    """Integer characteristic polynomial with constant term +-1."""
    p = A.charpoly()
    const = p.coeff(0)
    integral = p.is_integral()
    return UnimodularityEvidence(p, integral, const, integral and const in (1, -1))


@dataclass(frozen=True)
class HyperbolicityEvidence:
    charpoly: UniPoly
    value_at_one: Fraction
    value_at_minus_one: Fraction
    reciprocal_gcd: UniPoly
    reduced_factor: UniPoly | None
    band_root_count: int
    hyperbolic: bool

    def __bool__(self):
        return self.hyperbolic

    @property
    def reciprocal_gcd_degree(self) -> int:
        return self.reciprocal_gcd.degree

    def to_json(self) -> dict:
        return {
            "p(1)": frac_str(self.value_at_one),
            "p(-1)": frac_str(self.value_at_minus_one),
            "reciprocal_gcd": poly_to_doc(self.reciprocal_gcd),
            "reciprocal_gcd_degree": self.reciprocal_gcd_degree,
            "reduced_factor": poly_to_doc(self.reduced_factor) if self.reduced_factor is not None else None,
            "roots_in_[-2,2]": self.band_root_count,
            "hyperbolic": self.hyperbolic,
        }


def hyperbolicity_of_poly(p: UniPoly) -> HyperbolicityEvidence:
    at1, atm1 = p(Fraction(1)), p(Fraction(-1))
    g = poly_gcd(p, p.reversal())
    if at1 == 0 or atm1 == 0:
        return HyperbolicityEvidence(p, at1, atm1, g, None, 0, False)
    if g.degree <= 0:
        return HyperbolicityEvidence(p, at1, atm1, g, None, 0, True)
    reduced = chebyshev_reduce(g)
    count = sturm_closed_count(reduced, -2, 2)
    return HyperbolicityEvidence(p, at1, atm1, g, reduced, count, count == 0)


def is_hyperbolic(A: Matrix) -> HyperbolicityEvidence:
    """Exact decision of whether A has no eigenvalue of modulus one."""
    return hyperbolicity_of_poly(A.charpoly())


# -- signature and semisimplicity ---------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    expanding: int
    contracting: int

    def unordered(self) -> tuple[int, int]:
        return tuple(sorted((self.expanding, self.contracting)))

    def __str__(self):
        a, b = self.unordered()
        return "{" + f"{a},{b}" + "}"


def signature(A: Matrix, evidence: HyperbolicityEvidence | None) -> Signature:
    """Counts of eigenvalues outside and inside the unit circle."""
    if evidence is None or not evidence.hyperbolic:
        raise ValueError("signature needs hyperbolicity evidence")
    if evidence.charpoly != A.charpoly():
        raise ValueError("evidence does not belong to this matrix")
    inside = count_roots_inside_unit_disk(evidence.charpoly)
    return Signature(A.nrows - inside, inside)


def is_semisimple(A: Matrix) -> bool:
    """The minimal polynomial is square-free iff the radical of the charpoly kills A."""
    rad = A.charpoly().square_free()
    n = A.nrows
    acc = Matrix.zeros(n, n)
    for c in reversed(rad.coeffs):
        acc = acc @ A + Matrix.identity(n) * c
    return acc.is_zero()


@dataclass(frozen=True)
class FactorEntry:
    poly: UniPoly
    multiplicity: int
    unit: bool

    @property
    def degree(self) -> int:
        return self.poly.degree

    def to_json(self) -> dict:
        return {**poly_to_doc(self.poly), "multiplicity": self.multiplicity, "degree": self.degree, "unit": self.unit}


def factor_table(p: UniPoly) -> tuple[FactorEntry, ...]:
    fac = factor_over_Z(p)
    return tuple(
        FactorEntry(f, e, f.lc == 1 and f.coeff(0) in (1, -1)) for f, e in fac.factors
    )


def flag_blocks(L: LieAlgebra) -> list[int] | None:
    """Layer sizes of a series-adapted basis, None otherwise."""
    return list(type_of(L)) if conforms_to_series_basis(L) else None


def _block_ranges(sizes: Sequence[int]):
    start = 0
    for s in sizes:
        yield range(start, start + s)
        start += s


def preserves_flag(A: Matrix, sizes: Sequence[int]) -> bool:
    """A maps span of the last coordinates of every tail of blocks into itself."""
    ranges = list(_block_ranges(sizes))
    for b, cols in enumerate(ranges):
        for earlier in ranges[:b]:
            if any(A[i, j] != 0 for i in earlier for j in cols):
                return False
    return True


def block_charpolys(A: Matrix, sizes: Sequence[int]) -> list[UniPoly]:
    if sum(sizes) != A.nrows:
        raise ValueError("block sizes do not add up to the matrix size")
    if not preserves_flag(A, sizes):
        raise ValueError("block split is not A-invariant")
    return [A.submatrix(r, r).charpoly() for r in _block_ranges(sizes)]


# -- certificates -----------------------------------------------------------------------


@dataclass(frozen=True)
class AnosovCertificate:
    algebra: LieAlgebra
    matrix: Matrix
    charpoly: UniPoly
    constant_term: Fraction
    unimodularity: UnimodularityEvidence
    hyperbolicity: HyperbolicityEvidence
    semisimple: bool
    signature: Signature
    block_charpolys: tuple[UniPoly, ...] | None
    factors: tuple[FactorEntry, ...]
    verdict: Verdict = Verdict.PASS

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "certificate",
            "verdict": self.verdict.value,
            "algebra": algebra_to_doc(self.algebra),
            "matrix": self.matrix.to_json(),
            "automorphism": True,
            "charpoly": poly_to_doc(self.charpoly),
            "constant_term": frac_str(self.constant_term),
            "unimodularity": self.unimodularity.to_json(),
            "hyperbolicity": self.hyperbolicity.to_json(),
            "semisimple": self.semisimple,
            "signature": [self.signature.expanding, self.signature.contracting],
            "block_charpolys": (
                [poly_to_doc(p) for p in self.block_charpolys] if self.block_charpolys is not None else None
            ),
            "factors": [f.to_json() for f in self.factors],
        }


@dataclass(frozen=True)
class VerificationFailure:
    algebra: LieAlgebra
    matrix: Matrix
    failures: tuple[str, ...]
    details: dict = field(default_factory=dict)
    verdict: Verdict = Verdict.FAIL

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "certificate",
            "verdict": self.verdict.value,
            "algebra": algebra_to_doc(self.algebra),
            "matrix": self.matrix.to_json(),
            "failures": list(self.failures),
            "details": self.details,
        }


def verify_anosov(L: LieAlgebra, A: Matrix) -> AnosovCertificate | VerificationFailure:
    """Check automorphism, unimodularity and hyperbolicity; name every failure."""
    if A.shape != (L.dim, L.dim):
        raise ValueError(f"matrix of shape {A.shape} does not act on an algebra of dimension {L.dim}")
    failures = []
    details: dict = {}
    if not is_automorphism(L, A):
        failures.append("automorphism")
    uni = is_unimodular(A)
    details["unimodularity"] = uni.to_json()
    if not uni:
        failures.append("unimodular")
    hyp = is_hyperbolic(A)
    details["hyperbolicity"] = hyp.to_json()
    if not hyp:
        failures.append("hyperbolic")
    if failures:
        return VerificationFailure(L, A, tuple(failures), details)
    sizes = flag_blocks(L)
    blocks = None
    if sizes is not None and preserves_flag(A, sizes):
        blocks = tuple(block_charpolys(A, sizes))
    return AnosovCertificate(
        algebra=L,
        matrix=A,
        charpoly=uni.charpoly,
        constant_term=uni.constant_term,
        unimodularity=uni,
        hyperbolicity=hyp,
        semisimple=is_semisimple(A),
        signature=signature(A, hyp),
        block_charpolys=blocks,
        factors=factor_table(uni.charpoly),
    )


def recheck(cert: AnosovCertificate | VerificationFailure) -> bool:
    """Recompute everything from (algebra, matrix) and compare the serialized result."""
    return verify_anosov(cert.algebra, cert.matrix).to_json() == cert.to_json()


# -- type gate ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TypeGateResult:
    type: tuple[int, ...]
    admissible: bool
    clause: str | None
    reason: str
    dimension_bound_ok: bool

    def to_json(self) -> dict:
        return {
            "type": list(self.type),
            "admissible": self.admissible,
            "clause": self.clause,
            "reason": self.reason,
            "dimension_at_least_2r_plus_2": self.dimension_bound_ok,
        }


def type_gate(t: Sequence[int]) -> TypeGateResult:
    """Necessary condition on the type of an Anosov algebra.

    Non-abelian types need n1 >= 4 with all later n_i >= 2, or n1 = n2 = 3
    with all later n_i >= 2.  An abelian type (n) needs n >= 2.
    """
    t = tuple(int(x) for x in t)
    if not t or any(x <= 0 for x in t):
        raise ValueError(f"invalid type {t}")
    r, dim = len(t), sum(t)
    bound_ok = dim >= 2 * r + 2
    if r == 1:
        ok = t[0] >= 2
        return TypeGateResult(t, ok, "abelian" if ok else None,
                              "abelian of dimension >= 2" if ok else "a 1-dimensional torus has no hyperbolic automorphism",
                              bound_ok)
    if t[0] >= 4 and all(x >= 2 for x in t[1:]):
        return TypeGateResult(t, True, "i", "n1 >= 4 and n_i >= 2 for i >= 2", bound_ok)
    if t[0] == 3 and t[1] == 3 and all(x >= 2 for x in t[2:]):
        return TypeGateResult(t, True, "ii", "n1 = n2 = 3 and n_i >= 2 for i >= 3", bound_ok)
    if t[0] < 3:
        reason = f"n1 = {t[0]} < 3"
    elif t[0] == 3 and t[1] != 3:
        reason = f"n1 = 3 forces n2 = 3, got n2 = {t[1]}"
    else:
        bad = next(i for i, x in enumerate(t[1:], start=2) if x < 2)
        reason = f"n{bad} = {t[bad - 1]} < 2"
    return TypeGateResult(t, False, None, reason, bound_ok)


# -- obstructions ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ObstructionReport:
    criterion: str
    parameters: dict
    verdict: Verdict
    enumeration: dict | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "parameters": self.parameters,
            "verdict": self.verdict.value,
            "enumeration": self.enumeration,
            "note": self.note,
        }


def enumerate_norm_one(k: int, bound: int) -> list[tuple[int, int]]:
    """Integer solutions of x^2 - k y^2 = 1 with |x|, |y| <= bound, one pass over x."""
    out = []
    for x in range(-bound, bound + 1):
        num = x * x - 1
        if k == 0:
            if num == 0:
                out.extend((x, y) for y in range(-bound, bound + 1))
            continue
        if num % k:
            continue
        ysq = num // k
        if ysq < 0:
            continue
        y = isqrt(ysq)
        if y * y != ysq or y > bound:
            continue
        out.append((x, y))
        if y:
            out.append((x, -y))
    return sorted(out)


def _box_values(form, box: int = 8) -> list[str]:
    """Nonzero values of the form on lattice points with |x|, |y| <= box.

    For each such value p the set f = p is finite exactly when the form
    splits over Q (square class 1), so the class decides every p at once;
    the values are kept as supporting data.
    """
    vals = {form.poly.evaluate((x, y)) for x in range(-box, box + 1) for y in range(-box, box + 1)}
    return [frac_str(v) for v in sorted(v for v in vals if v != 0)]


def region_obstructions(L: LieAlgebra, bound: int = 10**4) -> ObstructionReport:
    """Apply the two lattice-region criteria to a binary quadratic Pfaffian form.

    A definite form (k < 0) has bounded regions f <= c, which an Anosov
    algebra forbids.  For k = 1 the equation x^2 - y^2 = 1 has finitely many
    but some integer solutions, also forbidden.  When the algebra has an
    abelian factor the test runs on the reduced algebra.
    """
    params: dict = {}
    target = L
    af = max_abelian_factor(L)
    if af.m:
        target = af.reduced
        params["abelian_factor_dim"] = af.m
    try:
        form = pfaffian_form(target)
    except ValueError as exc:
        return ObstructionReport("region", params, Verdict.INAPPLICABLE, note=f"no Pfaffian form: {exc}")
    params["pfaffian_form"] = str(form)
    if form.is_zero() or form.nvars != 2 or form.degree != 2:
        return ObstructionReport(
            "region", params, Verdict.INAPPLICABLE,
            note="criteria are implemented for nonzero binary quadratic forms only",
        )
    k = binary_quadratic_class(form)
    params["k"] = k
    params["bound"] = bound
    params["box_values"] = _box_values(form)
    if k == 0:
        return ObstructionReport("region", params, Verdict.DEFERRED, note="rank-one form: no obstruction")
    if k < 0:
        sols = enumerate_norm_one(k, bound)
        return ObstructionReport(
            "region-unbounded", params, Verdict.OBSTRUCTED,
            {"equation": f"x^2 - ({k})*y^2 = 1", "solutions": [list(s) for s in sols]},
            note="definite form: every region f <= c is bounded",
        )
    sols = enumerate_norm_one(k, bound)
    enumeration = {"equation": f"x^2 - {k}*y^2 = 1", "count": len(sols), "solutions": [list(s) for s in sols[:16]]}
    if k == 1:
        return ObstructionReport(
            "region-integer-solutions", params, Verdict.OBSTRUCTED, enumeration,
            note="x^2 - y^2 = 1 has a nonempty finite set of integer solutions",
        )
    a, b = pell_fundamental(k)
    params["pell_fundamental"] = [a, b]
    return ObstructionReport(
        "region-integer-solutions", params, Verdict.DEFERRED, enumeration,
        note=f"Pell solution ({a}, {b}) generates infinitely many solutions: no obstruction",
    )


@dataclass(frozen=True)
class AbelianReduction:
    reduced: LieAlgebra
    m: int
    verdict: Verdict
    report: ObstructionReport


def abfactor_reduce(L: LieAlgebra) -> AbelianReduction:
    """Split off the abelian factor: L is Anosov iff the rest is and m >= 2 (when m >= 1)."""
    af = max_abelian_factor(L)
    params = {"m": af.m, "reduced_dim": af.reduced.dim}
    if af.m == 1:
        rep = ObstructionReport("abelian-factor", params, Verdict.OBSTRUCTED,
                                note="abelian factor of dimension 1")
        return AbelianReduction(af.reduced, af.m, Verdict.OBSTRUCTED, rep)
    note = "no abelian factor" if af.m == 0 else "Anosov iff the reduced algebra is"
    rep = ObstructionReport("abelian-factor", params, Verdict.DEFERRED, note=note)
    return AbelianReduction(af.reduced, af.m, Verdict.DEFERRED, rep)


def type_gate_obstruction(L: LieAlgebra) -> ObstructionReport:
    gate = type_gate(type_of(L))
    verdict = Verdict.DEFERRED if gate.admissible else Verdict.OBSTRUCTED
    return ObstructionReport("type-gate", {"type": list(gate.type)}, verdict, note=gate.reason)


# -- eigenvalue units -----------------------------------------------------------------------


@dataclass(frozen=True)
class BlockUnitReport:
    charpoly: UniPoly
    factors: tuple[FactorEntry, ...]

    @property
    def ok(self) -> bool:
        return all(f.unit and f.degree > 1 for f in self.factors)

    def to_json(self) -> dict:
        return {"charpoly": poly_to_doc(self.charpoly), "factors": [f.to_json() for f in self.factors], "ok": self.ok}


@dataclass(frozen=True)
class UnitReport:
    blocks: tuple[BlockUnitReport, ...]

    @property
    def ok(self) -> bool:
        return all(b.ok for b in self.blocks)

    def to_json(self) -> dict:
        return {"blocks": [b.to_json() for b in self.blocks], "ok": self.ok}


def eigenvalue_unit_report(A: Matrix, sizes: Sequence[int] | None = None) -> UnitReport:
    """Irreducible factors of each diagonal block's charpoly, with unit flags and degrees."""
    sizes = list(sizes) if sizes is not None else [A.nrows]
    blocks = []
    for p in block_charpolys(A, sizes):
        if p.is_integral():
            entries = factor_table(p)
        else:
            entries = (FactorEntry(p, 1, False),)
        blocks.append(BlockUnitReport(p, entries))
    return UnitReport(tuple(blocks))


__all__ = [
    "AbelianReduction",
    "AnosovCertificate",
    "BlockUnitReport",
    "FactorEntry",
    "HyperbolicityEvidence",
    "ObstructionReport",
    "Signature",
    "TypeGateResult",
    "UnimodularityEvidence",
    "UnitReport",
    "VerificationFailure",
    "Verdict",
    "abfactor_reduce",
    "block_charpolys",
    "enumerate_norm_one",
    "eigenvalue_unit_report",
    "factor_table",
    "hyperbolicity_of_poly",
    "is_automorphism",
    "is_hyperbolic",
    "is_semisimple",
    "is_unimodular",
    "preserves_flag",
    "recheck",
    "region_obstructions",
    "signature",
    "type_gate",
    "type_gate_obstruction",
    "verify_anosov",
]
