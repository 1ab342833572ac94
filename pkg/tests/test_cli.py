import json
import subprocess
import sys

import pytest

from anosov_lab.cli.main import main
from anosov_lab.construct import hk_automorphism
from anosov_lab.construct.catalog import h_algebra
from anosov_lab.documents import algebra_from_doc, algebra_to_doc, dumps, matrix_to_doc
from anosov_lab.exact import Matrix

# 1-based indices: [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e4, [e1,e4]=e2 breaks Jacobi on (e1, e2, e3)
JACOBI_BROKEN = {
    "schema": "anosov-lab/1",
    "kind": "algebra",
    "dim": 4,
    "names": ["e1", "e2", "e3", "e4"],
    "brackets": [
        {"i": 1, "j": 2, "terms": [{"k": 3, "coeff": "1"}]},
        {"i": 1, "j": 3, "terms": [{"k": 4, "coeff": "1"}]},
        {"i": 2, "j": 3, "terms": [{"k": 4, "coeff": "1"}]},
        {"i": 1, "j": 4, "terms": [{"k": 2, "coeff": "1"}]},
    ],
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_inspect_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "f3", "--out", str(tmp_path / "f3.json"))
    assert code == 0
    code, out, _ = run(capsys, "inspect", str(tmp_path / "f3.json"))
    assert code == 0 and "type (3,3), m=0" in out
    code, out, _ = run(capsys, "inspect", "abelian(4)")
    assert code == 0 and "type (4), m=4" in out


def test_inspect_rejects_broken_jacobi(capsys, tmp_path):
    code, _, err = run(capsys, "inspect", write(tmp_path, "bad.json", JACOBI_BROKEN))
    assert code == 2 and "Jacobi" in err


def test_inspect_json_is_deterministic(capsys):
    first = run(capsys, "inspect", "g", "--json")
    second = run(capsys, "inspect", "g", "--json")
    assert first == second and first[0] == 0
    json.loads(first[1])


def test_verify_exit_codes(capsys, tmp_path):
    c = hk_automorphism(2, 3, 2, 3)
    alg = write(tmp_path, "h2.json", algebra_to_doc(c.algebra))
    mat = write(tmp_path, "a.json", matrix_to_doc(c.automorphism))
    code, out, _ = run(capsys, "verify", alg, mat)
    assert code == 0 and json.loads(out)["verdict"] == "PASS"

    code, out, _ = run(capsys, "verify", "f3", "--matrix", json.dumps(matrix_to_doc(Matrix.identity(6))))
    assert code == 1
    assert json.loads(out)["failures"] == ["hyperbolic"]

    code, _, err = run(capsys, "verify", "n_k(2)", "--matrix", json.dumps(matrix_to_doc(Matrix.identity(8))))
    assert code == 2 and "dimension" in err


def test_verify_missing_matrix_is_input_error(capsys):
    code, _, _ = run(capsys, "verify", "f3")
    assert code == 2


def test_pell(capsys):
    code, out, _ = run(capsys, "pell", "2")
    doc = json.loads(out)
    assert code == 0 and (doc["a"], doc["b"]) == (3, 2)
    code, _, _ = run(capsys, "pell", "4")
    assert code == 2


def test_dual_on_document(capsys, tmp_path):
    run(capsys, "catalog", "h3+h3", "--out", str(tmp_path / "h3h3.json"))
    code, out, _ = run(capsys, "dual", str(tmp_path / "h3h3.json"))
    assert code == 0
    assert algebra_from_doc(json.loads(out)) == h_algebra()


def test_gate(capsys):
    code, out, _ = run(capsys, "gate", "3,3,2")
    doc = json.loads(out)
    assert code == 0 and doc["admissible"] and "note" in doc
    code, out, _ = run(capsys, "gate", "3,2")
    assert code == 1 and not json.loads(out)["admissible"]
    code, _, _ = run(capsys, "gate", "a,b")
    assert code == 2


def test_construct_commands(capsys):
    code, out, _ = run(capsys, "construct", "graded-sum", "--algebra", "h3", "--grading", "1,1,2",
                       "--matrix", "[[2, 1], [1, 1]]")
    assert code == 0, out
    assert json.loads(out)["certificate"]["verdict"] == "PASS"
    code, out, _ = run(capsys, "construct", "lk", "--k", "1")
    assert code == 1 and json.loads(out)["verdict"] == "NOT-ANOSOV"
    code, _, _ = run(capsys, "construct", "hk", "--k", "2", "--a", "3", "--b", "2", "--n", "1")
    assert code == 2
    code, out, _ = run(capsys, "construct", "witness", "--family", "h", "--k", "3")
    assert code == 0 and json.loads(out)["matches_catalog"]


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert any(e["name"] == "g" for e in json.loads(out)["entries"])
    code, _, _ = run(capsys, "catalog", "n_k", "--k", "4")
    assert code == 2


def test_pfaffian_command(capsys):
    code, out, _ = run(capsys, "pfaffian", "n_k", "--k", "3", "--json")
    assert code == 0
    assert "x^2 - 3*y^2" in out


@pytest.mark.parametrize("name", ["f3", "g", "h", "l4", "h3h5", "h3+h3", "abelian(3)"])
def test_round_trip_is_byte_identical(capsys, tmp_path, name):
    code, out, _ = run(capsys, "catalog", name)
    assert code == 0
    doc = json.loads(out)
    again = dumps(algebra_to_doc(algebra_from_doc(doc), name=doc.get("name")))
    assert again == out


def test_report_reproducible_and_agrees(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code1, _, _ = run(capsys, "report", "--json", "--out", str(a))
    code2, _, _ = run(capsys, "report", "--json", "--out", str(b))
    assert code1 == code2 == 0
    assert a.read_bytes() == b.read_bytes()
    bundle = json.loads(a.read_text())
    assert bundle["all_agree"] and not bundle["disagreements"]
    rows = {r["key"]: r for r in bundle["rows"]}
    assert list(rows) == sorted(rows)
    assert rows["02-n_k-02"]["verdict"] == "PASS"
    assert sorted(rows["02-n_k-02"]["signature"]) == [3, 3]
    assert rows["02-n_k-01"]["verdict"] == "OBSTRUCTED"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "anosov_lab", "pell", "3"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["a"] == 2
