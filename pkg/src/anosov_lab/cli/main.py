"""Command-line front end.

Exit codes: 0 success, 1 verified negative (FAIL, NOT-ANOSOV, rejected
type, report disagreement), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..certify import (
    AnosovCertificate,
    Verdict,
    region_obstructions,
    type_gate,
    verify_anosov,
)
from ..construct import (
    FAMILIES,
    CatalogError,
    ConstructionError,
    GradedSumError,
    NotAnosov,
    abelian_automorphism,
    balanced_hk_n,
    catalog,
    catalog_index,
    default_gradation,
    f3_default,
    f3_induced_automorphism,
    g_automorphism,
    graded_sum,
    h1_base_automorphism,
    hk_automorphism,
    lk_automorphism,
    nk_automorphism,
    scheuneman_dual,
    sqrt_form_witness,
)
from ..construct.dual import DegenerateJSpanError
from ..documents import (
    SCHEMA,
    DocumentError,
    algebra_from_doc,
    algebra_to_doc,
    dumps,
    form_to_doc,
    matrix_from_doc,
    matrix_to_doc,
)
from ..exact import UnsupportedDegreeError, pell_fundamental
from ..forms import (
    binary_cubic_xyy_test,
    binary_quadratic_class,
    hessian,
    pfaffian_form,
)
from ..lie import (
    LieAlgebraError,
    NotNilpotentError,
    characteristic_subspaces,
    max_abelian_factor,
    type_of,
)
from .report import build_report, render_table

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2

INPUT_ERRORS = (
    CatalogError,
    ConstructionError,
    DegenerateJSpanError,
    DocumentError,
    GradedSumError,
    LieAlgebraError,
    NotNilpotentError,
    UnsupportedDegreeError,
    ValueError,
    ZeroDivisionError,
    OSError,
    json.JSONDecodeError,
)


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


# -- loading ---------------------------------------------------------------------------------


def _read_json(source: str):
    path = Path(source)
    if path.exists():
        return json.loads(path.read_text())
    try:
        return json.loads(source)
    except json.JSONDecodeError:
        raise InputError(f"{source!r} is neither a readable file nor inline JSON") from None


def load_algebra(source: str, k: int | None = None):
    """An algebra from a JSON file, or a catalog name when no such file exists."""
    if Path(source).exists():
        return algebra_from_doc(json.loads(Path(source).read_text())), None
    return catalog(source, k), source


def load_matrix(source: str):
    return matrix_from_doc(_read_json(source))


# -- output ----------------------------------------------------------------------------------


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, doc: dict) -> None:
    _emit(args, dumps(doc))


# -- commands --------------------------------------------------------------------------------


def cmd_inspect(args) -> int:
    L, _ = load_algebra(args.algebra, args.k)
    t = type_of(L)
    cs = characteristic_subspaces(L)
    m = max_abelian_factor(L).m
    doc = {
        "schema": SCHEMA,
        "kind": "inspection",
        "dim": L.dim,
        "type": list(t),
        "center_dim": cs.center.dim,
        "derived_dim": cs.derived.dim,
        "center_cap_derived_dim": cs.center_cap_derived.dim,
        "abelian_factor_dim": m,
        "series_dims": [s.dim for s in cs.series],
        "brackets": L.describe_brackets(),
    }
    if args.json:
        _emit_json(args, doc)
    else:
        lines = [
            f"type ({','.join(map(str, t))}), m={m}",
            f"dim {L.dim}, center {cs.center.dim}, derived {cs.derived.dim}, "
            f"center/derived intersection {cs.center_cap_derived.dim}",
            "lower central series dims: " + " > ".join(str(s.dim) for s in cs.series),
        ]
        lines += doc["brackets"]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_pfaffian(args) -> int:
    L, _ = load_algebra(args.algebra, args.k)
    f = pfaffian_form(L)
    doc = {"schema": SCHEMA, "kind": "pfaffian", "form": form_to_doc(f.poly, f.degree)}
    doc["hessian"] = str(hessian(f))
    if f.nvars == 2 and f.degree == 2:
        doc["binary_quadratic_class"] = binary_quadratic_class(f)
        doc["region"] = region_obstructions(L, args.bound).to_json()
    if f.nvars == 2 and f.degree == 3:
        res = binary_cubic_xyy_test(f)
        doc["equivalent_to_xy2"] = res.equivalent
        doc["xy2_witness"] = res.witness.to_json() if res.witness is not None else None
        doc["xy2_diagnostic"] = res.diagnostic
    if args.json:
        _emit_json(args, doc)
    else:
        lines = [f"f = {f}", f"Hessian = {doc['hessian']}"]
        if "binary_quadratic_class" in doc:
            lines.append(f"binary quadratic class k = {doc['binary_quadratic_class']}")
            lines.append(f"region criterion: {doc['region']['verdict']} ({doc['region']['note']})")
        if "equivalent_to_xy2" in doc:
            lines.append(f"equivalent to x*y^2: {res.equivalent} ({res.diagnostic})")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    L, _ = load_algebra(args.algebra, args.k)
    source = args.matrix_file or args.matrix
    if source is None:
        raise InputError("verify needs an automorphism matrix (positional or --matrix)")
    A = load_matrix(source)
    if A.shape != (L.dim, L.dim):
        raise InputError(f"matrix of shape {A.shape[0]}x{A.shape[1]} for an algebra of dimension {L.dim}")
    cert = verify_anosov(L, A)
    _emit_json(args, cert.to_json())
    return EXIT_OK if isinstance(cert, AnosovCertificate) else EXIT_NEGATIVE


def _construct(args):
    kind = args.kind
    if kind == "graded-sum":
        if args.algebra is None or args.matrix is None:
            raise InputError("graded-sum needs --algebra and --matrix")
        L, _ = load_algebra(args.algebra, args.k)
        grading = (
            tuple(int(x) for x in args.grading.split(",")) if args.grading else default_gradation(L)
        )
        res = graded_sum(L, grading, load_matrix(args.matrix))
        return res.algebra, res.automorphism, {"charpoly": str(res.charpoly), "description": res.description}
    if kind == "hk":
        k = _need(args, "k")
        if args.a is None or args.b is None:
            a, b = pell_fundamental(k)
        else:
            a, b = args.a, args.b
        n = args.n if args.n is not None else balanced_hk_n(k, a, b)
        c = hk_automorphism(k, a, b, n)
    elif kind == "h1":
        c = h1_base_automorphism(_need(args, "a"))
    elif kind == "lk":
        c = lk_automorphism(_need(args, "k"))
    elif kind == "nk":
        c = nk_automorphism(_need(args, "k"))
    elif kind == "f3":
        c = f3_induced_automorphism(load_matrix(args.matrix)) if args.matrix else f3_default()
    elif kind == "g":
        c = g_automorphism()
    elif kind == "abelian":
        c = abelian_automorphism(_need(args, "n"))
    else:  # argparse restricts the choices
        raise InputError(f"unknown construction {kind!r}")
    if isinstance(c, NotAnosov):
        return c, None, {}
    return c.algebra, c.automorphism, dict(c.parameters)


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise InputError(f"this construction needs --{name}")
    return value


def cmd_construct(args) -> int:
    if args.kind == "witness":
        if args.family is None:
            raise InputError(f"witness needs --family, one of {', '.join(FAMILIES)}")
        w = sqrt_form_witness(args.family, _need(args, "k"))
        _emit_json(args, w.to_json())
        return EXIT_OK if w.matches else EXIT_NEGATIVE
    L, A, params = _construct(args)
    if isinstance(L, NotAnosov):
        _emit_json(args, {
            "schema": SCHEMA,
            "kind": "construction",
            "verdict": "NOT-ANOSOV",
            "reason": L.reason,
            "algebra": algebra_to_doc(L.algebra),
            "obstruction": L.obstruction.to_json(),
        })
        return EXIT_NEGATIVE
    cert = verify_anosov(L, A)
    _emit_json(args, {
        "schema": SCHEMA,
        "kind": "construction",
        "construction": args.kind,
        "parameters": params,
        "algebra": algebra_to_doc(L),
        "automorphism": matrix_to_doc(A),
        "certificate": cert.to_json(),
    })
    return EXIT_OK if cert.verdict is Verdict.PASS else EXIT_NEGATIVE


def cmd_dual(args) -> int:
    L, _ = load_algebra(args.algebra, args.k)
    _emit_json(args, algebra_to_doc(scheuneman_dual(L)))
    return EXIT_OK


def cmd_pell(args) -> int:
    a, b = pell_fundamental(args.value)
    _emit_json(args, {"schema": SCHEMA, "kind": "pell", "k": args.value, "a": a, "b": b})
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        _emit_json(args, {"schema": SCHEMA, "kind": "catalog", "entries": catalog_index()})
        return EXIT_OK
    L = catalog(args.name, args.k)
    name = args.name if args.k is None or "(" in args.name else f"{args.name}({args.k})"
    _emit_json(args, algebra_to_doc(L, name=name))
    return EXIT_OK


_CITED_TYPES = {(4, 3), (5, 2), (5, 3), (3, 3, 2), (6, 2)}


def cmd_gate(args) -> int:
    try:
        t = tuple(int(x) for x in args.type.strip("()").split(","))
    except ValueError:
        raise InputError(f"type must be comma-separated integers, got {args.type!r}") from None
    res = type_gate(t)
    doc = {"schema": SCHEMA, "kind": "gate", **res.to_json()}
    if res.admissible and t in _CITED_TYPES:
        doc["note"] = ("admissible by the type gate; algebras of this type outside the Anosov list are "
                       "eliminated by a case analysis that is out of mechanized scope")
    _emit_json(args, doc)
    return EXIT_OK if res.admissible else EXIT_NEGATIVE


def cmd_report(args) -> int:
    bundle = build_report(args.bound)
    text = dumps(bundle) if args.json else render_table(bundle)
    if args.out:
        Path(args.out).write_text(dumps(bundle))
        if not args.json:
            sys.stdout.write(text)
    else:
        sys.stdout.write(text)
    if not bundle["all_agree"]:
        sys.stderr.write("disagreeing rows: " + ", ".join(bundle["disagreements"]) + "\n")
        return EXIT_NEGATIVE
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, help="parameter k for n_k, h_k, l_k")
    common.add_argument("--a", type=int, help="parameter a")
    common.add_argument("--b", type=int, help="parameter b")
    common.add_argument("--n", type=int, help="parameter n")
    common.add_argument("--matrix", help="matrix JSON file (or inline JSON)")
    common.add_argument("--out", help="write the output to this file")
    common.add_argument("--bound", type=int, default=10**4, help="enumeration box for region criteria")
    common.add_argument("--json", action="store_true", help="JSON instead of text where both exist")

    parser = argparse.ArgumentParser(prog="anosov", description="Exact tools for rational Anosov Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", parents=[common], help="type, center, abelian factor, series")
    p.add_argument("algebra", help="algebra JSON file or catalog name")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("pfaffian", parents=[common], help="Pfaffian form, Hessian and form tests")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("verify", parents=[common], help="certify an automorphism as Anosov")
    p.add_argument("algebra")
    p.add_argument("matrix_file", nargs="?", help="automorphism matrix file (alternative to --matrix)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="run an explicit construction and certify it")
    p.add_argument("kind", choices=["graded-sum", "hk", "h1", "lk", "nk", "f3", "g", "abelian", "witness"])
    p.add_argument("--algebra", help="algebra for graded-sum (file or catalog name)")
    p.add_argument("--grading", help="comma-separated weights for graded-sum")
    p.add_argument("--family", choices=FAMILIES, help="witness family")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("dual", parents=[common], help="Scheuneman dual of a 2-step algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("pell", parents=[common], help="fundamental solution of x^2 - k y^2 = 1")
    p.add_argument("value", type=int, metavar="K")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("catalog", parents=[common], help="list the catalog or export one entry")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("gate", parents=[common], help="type gate for a type such as 3,3,2")
    p.add_argument("type")
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("report", parents=[common], help="recompute the classification table")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"anosov: {exc}\n")
        return EXIT_INPUT
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"anosov: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
