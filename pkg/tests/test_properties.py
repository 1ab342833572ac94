from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from anosov_lab.certify import (
    AnosovCertificate,
    Verdict,
    enumerate_norm_one,
    is_hyperbolic,
    recheck,
    signature,
    type_gate,
    verify_anosov,
)
from anosov_lab.cli.report import build_report
from anosov_lab.construct import catalog, graded_sum, same_j_span, scheuneman_dual
from anosov_lab.exact import (
    Matrix,
    MultiPoly,
    QuadFieldElement,
    UniPoly,
    factor_over_Z,
    square_free_part,
)
from anosov_lab.forms import HomogeneousForm, binary_cubic_xyy_test, binary_form, substitute_and_scale
from anosov_lab.lie import LieAlgebra, is_homomorphism, is_isomorphism_via_j, type_of

small = st.integers(-6, 6)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def int_matrices(n_min=1, n_max=4, lo=-3, hi=3):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(Matrix)


@st.composite
def hyperbolic_sl2(draw):
    """Integer 2x2 matrices with det +-1 and |trace| large enough to be hyperbolic."""
    a = draw(st.integers(-6, 6))
    b = draw(st.integers(1, 6).map(lambda v: v * draw(st.sampled_from([-1, 1]))))
    d = draw(st.integers(-6, 6))
    det = draw(st.sampled_from([1, -1]))
    num = a * d - det
    assume(num % b == 0)
    c = num // b
    M = Matrix([[a, b], [c, d]])
    tr = a + d
    assume((det == 1 and abs(tr) > 2) or (det == -1 and tr != 0))
    return M


# -- exact arithmetic ------------------------------------------------------------------------


@given(st.sampled_from([2, 3, 5, 6, 7, 10]), rationals, rationals, rationals, rationals)
def test_quad_field_is_a_field(k, a, b, c, d):
    u, v = QuadFieldElement(a, b, k), QuadFieldElement(c, d, k)
    assert (u + v) - v == u
    assert (u * v).norm() == u.norm() * v.norm()
    assert (u * v).conjugate() == u.conjugate() * v.conjugate()
    if v != 0:
        assert (u / v) * v == u


@given(st.lists(small, min_size=1, max_size=7), st.lists(small, min_size=1, max_size=5))
def test_polynomial_division_identity(pc, qc):
    p, q = UniPoly(pc), UniPoly(qc)
    assume(not q.is_zero())
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=3), min_size=1, max_size=3))
def test_factorization_multiplies_back(parts):
    p = UniPoly([1])
    for coeffs in parts:
        f = UniPoly(coeffs)
        assume(not f.is_zero())
        p = p * f
    assert factor_over_Z(p).expand() == p


@given(st.integers(-10**6, 10**6).filter(bool))
def test_square_free_part_reconstructs(n):
    k, q = square_free_part(n)
    assert q * q * k == n


@given(int_matrices(lo=-4, hi=4))
def test_inverse_round_trip(M):
    assume(M.det() != 0)
    assert M @ M.inverse() == Matrix.identity(M.nrows)


# -- certification ------------------------------------------------------------------------------


@st.composite
def unimodular_matrices(draw, n):
    """Products of elementary row operations and a sign pattern: integral with det +-1."""
    A = Matrix.diagonal([draw(st.sampled_from([1, -1])) for _ in range(n)])
    for _ in range(draw(st.integers(1, 8))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i == j:
            continue
        rows = [[int(i2 == j2) for j2 in range(n)] for i2 in range(n)]
        rows[i][j] = draw(st.integers(-2, 2))
        A = Matrix(rows) @ A
    return A


@st.composite
def hyperbolic_unimodular(draw):
    """A block sum of hyperbolic SL2 blocks (and maybe a cubic companion), conjugated by a unimodular U."""
    blocks = draw(st.lists(hyperbolic_sl2(), min_size=1, max_size=2))
    if draw(st.booleans()):
        blocks.append(Matrix([[0, 0, 1], [1, 0, 1], [0, 1, 0]]))
    D = Matrix.block_diag(*blocks)
    U = draw(unimodular_matrices(D.nrows))
    return U @ D @ U.inverse()


@settings(max_examples=80, deadline=None)
@given(hyperbolic_unimodular())
def test_signature_of_inverse_swaps(A):
    assert A.is_integral() and A.det() in (1, -1)
    ev = is_hyperbolic(A)
    assert ev
    s = signature(A, ev)
    Ai = A.inverse()
    t = signature(Ai, is_hyperbolic(Ai))
    assert (s.expanding, s.contracting) == (t.contracting, t.expanding)
    assert s.expanding + s.contracting == A.nrows


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["h3", "f3", "l4", "h3+h3"]), hyperbolic_sl2())
def test_graded_sum_always_certifies(name, B):
    gs = graded_sum(catalog(name), None, B)
    cert = verify_anosov(gs.algebra, gs.automorphism)
    assert isinstance(cert, AnosovCertificate)
    assert cert.verdict is Verdict.PASS
    assert all(f.poly.coeff(0) in (1, -1) for f in cert.factors)
    assert recheck(cert)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_type_gate_dimension_consequence(t):
    res = type_gate(t)
    if res.admissible and len(t) > 1:
        assert res.dimension_bound_ok


def test_gate_rejected_types_never_certified():
    report = build_report(10**3)
    for row in report["rows"]:
        if row.get("type") and not type_gate(row["type"]).admissible:
            assert row["verdict"] != "PASS", row["key"]


@given(st.integers(-30, 30).filter(lambda k: k != 0), st.integers(1, 60))
def test_norm_one_enumeration_is_sound(k, bound):
    for x, y in enumerate_norm_one(k, bound):
        assert x * x - k * y * y == 1
        assert abs(x) <= bound and abs(y) <= bound


# -- Lie algebras and duality ---------------------------------------------------------------


@st.composite
def two_step_algebras(draw):
    n1 = draw(st.integers(3, 5))
    pairs = [(i, j) for i in range(n1) for j in range(i + 1, n1)]
    k = draw(st.integers(1, len(pairs) - 1))
    rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=len(pairs), max_size=len(pairs)),
                         min_size=k, max_size=k))
    assume(Matrix(rows).rank() == k)
    # every generator must appear in some bracket so the derived algebra sits in the last k slots
    brackets = {}
    for p, (i, j) in enumerate(pairs):
        terms = {n1 + l: row[p] for l, row in enumerate(rows) if row[p]}
        if terms:
            brackets[(i, j)] = terms
    return LieAlgebra(n1 + k, brackets)


@settings(max_examples=40, deadline=None)
@given(two_step_algebras())
def test_dual_type_and_involution(L):
    t = type_of(L)
    assume(len(t) == 2)
    n1, n2 = t
    assume(n2 < n1 * (n1 - 1) // 2)
    D = scheuneman_dual(L)
    assert type_of(D) == (n1, n1 * (n1 - 1) // 2 - n2)
    assert same_j_span(scheuneman_dual(D), L)


@settings(max_examples=40, deadline=None)
@given(int_matrices(n_min=6, n_max=6, lo=-1, hi=1))
def test_j_criterion_agrees_with_brackets(A):
    L = catalog("n_k", 2)
    assume(A.det() != 0)
    assert is_isomorphism_via_j(L, L, A) == is_homomorphism(L, L, A)


@settings(max_examples=40, deadline=None)
@given(int_matrices(n_min=6, n_max=6, lo=0, hi=1))
def test_bracket_check_on_diagonal_perturbations(A):
    L = catalog("h3+h3")
    assume(A.det() != 0)
    assert is_isomorphism_via_j(L, L, A) == is_homomorphism(L, L, A)


# -- forms --------------------------------------------------------------------------------------


@given(int_matrices(2, 2), int_matrices(2, 2), st.lists(small, min_size=4, max_size=4))
def test_substitution_composes(A, B, coeffs):
    assume(A.det() != 0 and B.det() != 0)
    f = binary_form(coeffs)
    lhs = substitute_and_scale(substitute_and_scale(f, A, 1), B, 1)
    rhs = substitute_and_scale(f, A @ B, 1)
    assert lhs.poly == rhs.poly


@settings(max_examples=60, deadline=None)
@given(int_matrices(2, 2, lo=-4, hi=4))
def test_xyy_orbit_is_recognised(B):
    assume(B.det() != 0)
    f = binary_form([0, 0, 1, 0]).poly.linear_substitute(B)
    res = binary_cubic_xyy_test(HomogeneousForm(f, 3))
    if B[1, 1] == 0:
        # the squared factor is x itself: s = t = 0 and the closed formula has no denominator
        assert not res.equivalent and "denominator" in res.diagnostic
    else:
        assert res.equivalent
        assert binary_form([0, 0, 1, 0]).poly.linear_substitute(res.witness) == f


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_cubic_witness_always_recomposes(coeffs):
    res = binary_cubic_xyy_test(binary_form(coeffs))
    if res.equivalent:
        assert binary_form([0, 0, 1, 0]).poly.linear_substitute(res.witness) == binary_form(coeffs).poly


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=4, max_size=4))
def test_binary_form_coefficients(coeffs):
    f = binary_form(coeffs)
    X, Y = MultiPoly.gens(("x", "y"))
    expected = sum((Fraction(c) * X ** (3 - i) * Y**i for i, c in enumerate(coeffs)), MultiPoly(("x", "y")))
    assert f.poly == expected
