"""Acceptance criteria, one check per criterion, each printing a single PASS/FAIL line.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
All comparisons are exact; the only tolerances are the numeric-oracle
margin in criterion 6 and the per-certificate time budget in criterion 3.
"""

import contextlib
import io
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import sympy  # noqa: E402
from test_oracles import (  # noqa: E402
    numeric_unit_circle,
    pell_brute,
    random_form,
    random_skew,
    sym_matrix,
    to_sympy,
)

from anosov_lab.certify import (  # noqa: E402
    AnosovCertificate,
    Verdict,
    is_hyperbolic,
    region_obstructions,
    verify_anosov,
)
from anosov_lab.cli.main import main  # noqa: E402
from anosov_lab.cli.report import CITED, build_report  # noqa: E402
from anosov_lab.construct import (  # noqa: E402
    NotAnosov,
    catalog,
    f3_induced_automorphism,
    graded_sum,
    h1_base_automorphism,
    hk_automorphism,
    lk_automorphism,
    minimal_hk_n,
    scheuneman_dual,
)
from anosov_lab.exact import (  # noqa: E402
    Matrix,
    MultiPoly,
    UniPoly,
    companion,
    count_roots_inside_unit_disk,
    is_square_free,
    pell_fundamental,
)
from anosov_lab.forms import hessian, pfaffian, pfaffian_form, substitute_and_scale  # noqa: E402
from anosov_lab.lie import LieAlgebra, type_of  # noqa: E402

TIME_BUDGET_S = 1.0
REGION_BOX = 10**4

X, Y = MultiPoly.gens(("x", "y"))
QX, QY, QZ, QW = MultiPoly.gens(("x", "y", "z", "w"))


def _collect(checks):
    """checks: iterable of (label, ok, info).  Returns (all ok, detail naming failures)."""
    failed = [f"{label}: {info}" for label, ok, info in checks if not ok]
    total = len(checks)
    if failed:
        return False, f"{total - len(failed)}/{total} checks; failing: " + "; ".join(failed)
    return True, f"{total}/{total} checks"


# -- criterion 1: catalog types -------------------------------------------------------------


def criterion_1():
    expected = {
        "f3": (3, 3), "g": (6, 2), "h": (4, 4), "l4": (2, 1, 1), "l4+l4": (4, 2, 2), "h3h5": (6, 2),
    }
    checks = []
    for name, t in expected.items():
        got = type_of(catalog(name))
        checks.append((name, got == t, f"got {got}, expected {t}"))
    return _collect(checks)


# -- criterion 2: Pfaffian forms and Hessians ----------------------------------------------------


def criterion_2():
    checks = []
    for k in (-3, -1, 1, 2, 3, 5):
        f = pfaffian_form(catalog("n_k", k))
        checks.append((f"n_k({k}) form", f.poly == X**2 - k * Y**2, str(f)))
        checks.append((f"n_k({k}) Hessian", hessian(f) == -4 * k, str(hessian(f))))
    for k in (-1, 1, 2, 3, 5):
        f = pfaffian_form(catalog("h_k", k))
        target = QX * QW + QY**2 - k * QZ**2
        checks.append((f"h_k({k}) form", f.poly == target, f"got {f}, expected {target}"))
        checks.append((f"h_k({k}) Hessian", hessian(f) == 4 * k, str(hessian(f))))
    g = pfaffian_form(catalog("g"))
    checks.append(("g form", g.is_zero(), str(g)))
    f = pfaffian_form(catalog("h3h5"))
    checks.append(("h3h5 form", f.poly == X * Y**2, str(f)))
    return _collect(checks)


# -- criterion 3: Anosov certificates ----------------------------------------------------------


def _timed_certificate(build):
    start = time.perf_counter()
    c = build()
    cert = verify_anosov(c.algebra, c.automorphism)
    return cert, time.perf_counter() - start


def criterion_3():
    x = UniPoly.x()
    cases = [("graded_sum(h3, [[2,1],[1,1]])",
              lambda: graded_sum(catalog("h3"), (1, 1, 2), Matrix([[2, 1], [1, 1]])))]
    for k in (2, 3, 5):
        a, b = pell_fundamental(k)
        n = minimal_hk_n(k, a, b)
        cases.append((f"hk(k={k}, a={a}, b={b}, n={n})", lambda k=k, a=a, b=b, n=n: hk_automorphism(k, a, b, n)))
    cases.append(("h1_base(a=2)", lambda: h1_base_automorphism(2)))
    for k in (2, 3, 5):
        cases.append((f"lk(k={k})", lambda k=k: lk_automorphism(k)))
    cases.append(("f3(companion x^3-x-1)", lambda: f3_induced_automorphism(Matrix(companion(x**3 - x - 1)))))

    checks = []
    for label, build in cases:
        cert, elapsed = _timed_certificate(build)
        if not isinstance(cert, AnosovCertificate):
            checks.append((label, False, f"verification failed: {cert.failures}"))
            continue
        dim = cert.matrix.nrows
        want = {6: "{3,3}", 8: "{4,4}"}[dim]
        sig = str(cert.signature)
        ok = cert.verdict is Verdict.PASS and sig == want and elapsed < TIME_BUDGET_S
        checks.append((label, ok, f"signature {sig} (expected {want}), {elapsed:.3f}s"))
    return _collect(checks)


# -- criterion 4: obstructions -------------------------------------------------------------------


def criterion_4():
    checks = []
    for name in ("n_k", "n_k+abelian(2)"):
        rep = region_obstructions(catalog(name, 1), bound=REGION_BOX)
        sols = rep.enumeration["solutions"] if rep.enumeration else None
        ok = (rep.verdict is Verdict.OBSTRUCTED and rep.criterion == "region-integer-solutions"
              and rep.enumeration["count"] == 2 and sols == [[-1, 0], [1, 0]])
        checks.append((f"{name}(1)", ok, f"{rep.verdict.value} {rep.criterion} solutions={sols}"))
    res = lk_automorphism(1)
    checks.append(("lk(1)", isinstance(res, NotAnosov) and "NOT-ANOSOV" in res.reason, repr(res)[:80]))
    for k in (-1, -2, -3, -5, -6, -7):
        rep = region_obstructions(catalog("n_k", k), bound=REGION_BOX)
        ok = rep.verdict is Verdict.OBSTRUCTED and rep.criterion == "region-unbounded"
        checks.append((f"n_k({k})", ok, f"{rep.verdict.value} {rep.criterion}"))
    return _collect(checks)


# -- criterion 5: duality -------------------------------------------------------------------------


def criterion_5():
    checks = []
    names = ["X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "Z4"]
    printed = LieAlgebra(8, {(0, 2): {4: 1}, (0, 3): {5: 1}, (1, 2): {6: 1}, (1, 3): {7: 1}}, names)
    D = scheuneman_dual(catalog("h3+h3"))
    checks.append(("dual(h3+h3)", D == printed, str(D)))
    for k in (1, 2, 3):
        f = pfaffian_form(scheuneman_dual(catalog("n_k", k)))
        target = QX * QW + QY**2 - k * QZ**2
        checks.append((f"dual(n_k({k})) form", f.poly == target, f"got {f}, expected {target}"))
    return _collect(checks)


# -- criterion 6: oracle suites ------------------------------------------------------------------


def criterion_6():
    checks = []

    rng = random.Random(6)
    bad = 0
    for size in (6, 8):
        for _ in range(50):
            M = random_skew(rng, size)
            det = sym_matrix(M).det()
            bad += pfaffian(M) ** 2 != Fraction(int(det.p), int(det.q))
    checks.append(("Pf^2 = det (100 matrices)", bad == 0, f"{bad} mismatches"))

    rng = random.Random(66)
    bad = done = 0
    while done < 100:
        nvars = rng.choice([2, 3])
        f = random_form(rng, nvars, rng.choice([2, 3]) if nvars == 2 else 2)
        A = Matrix([[rng.randint(-2, 2) for _ in range(nvars)] for _ in range(nvars)])
        if f.is_zero() or A.det() == 0:
            continue
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
        g = substitute_and_scale(f, A, c)
        syms = sympy.symbols(f.poly.variables)
        oracle = sympy.expand(sympy.hessian(to_sympy(g.poly, syms), syms).det())
        ours = hessian(g)
        covariant = hessian(f).linear_substitute(A) * (c**nvars * A.det() ** 2)
        bad += sympy.expand(to_sympy(ours, syms) - oracle) != 0 or ours != covariant
        done += 1
    checks.append(("Hessian covariance (100 cases)", bad == 0, f"{bad} mismatches"))

    rng = random.Random(666)
    bad = 0
    for _ in range(1000):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        on_circle, inside = numeric_unit_circle(rows)
        ev = is_hyperbolic(Matrix(rows))
        if bool(ev) is on_circle or (ev and count_roots_inside_unit_disk(ev.charpoly) != inside):
            bad += 1
    checks.append(("hyperbolicity vs numeric roots (1000 matrices)", bad == 0, f"{bad} disagreements"))

    ks = [k for k in range(2, 31) if is_square_free(k)]
    wrong = [k for k in ks if pell_fundamental(k) != pell_brute(k)]
    checks.append((f"Pell vs brute force ({len(ks)} values of k)", not wrong, f"wrong for {wrong}"))
    return _collect(checks)


# -- criterion 7: end-to-end report --------------------------------------------------------------


def _report_exit_code():
    with contextlib.redirect_stdout(io.StringIO()):
        return main(["report"])


def criterion_7():
    code = _report_exit_code()
    bundle = build_report(REGION_BOX)
    checks = [
        ("exit code", code == 0, f"exit code {code}"),
        ("all rows agree", bundle["all_agree"], f"disagreements: {bundle['disagreements']}"),
    ]
    for row in bundle["rows"]:
        if row["verdict"] == "PASS":
            ok = row.get("certificate", {}).get("verdict") == "PASS"
        elif row["verdict"] == "OBSTRUCTED":
            ok = bool(row.get("obstruction"))
        else:
            ok = row.get("tag") == CITED
        checks.append((row["key"], ok, f"verdict {row['verdict']} without certificate, obstruction or tag"))
    return _collect(checks)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
}


def _line(n, ok, detail):
    return f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}"


def _run(n, capsys):
    ok, detail = CRITERIA[n]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


def test_criterion_1_catalog_types(capsys):
    _run(1, capsys)


def test_criterion_2_pfaffian_forms(capsys):
    _run(2, capsys)


def test_criterion_3_anosov_certificates(capsys):
    _run(3, capsys)


def test_criterion_4_obstructions(capsys):
    _run(4, capsys)


def test_criterion_5_duality(capsys):
    _run(5, capsys)


def test_criterion_6_oracle_suites(capsys):
    _run(6, capsys)


def test_criterion_7_report(capsys):
    _run(7, capsys)


if __name__ == "__main__":
    failures = 0
    for n, check in CRITERIA.items():
        ok, detail = check()
        failures += not ok
        print(_line(n, ok, detail))
    sys.exit(1 if failures else 0)
