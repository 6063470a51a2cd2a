import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from matsep.cli import document_to_json, load_document, main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


TUPLE_DOC = {"kind": "lr-tuple", "n": 4, "matrices": [
    [[1, 2], [0, 4]], [["1/2", 1], [0, 3]], [[5, 0], [0, 1]], [[0, 7], [0, 2]]]}

PAIR_DOC = {"kind": "lr-pair", "n": 1,
            "first": [[[1, 5], [0, 2]]], "second": [[[3, 7], [0, 4]]]}

LEFT_DOC = {"kind": "left-matrix", "l": 2, "n": 3,
            "rows": [[1, 0, 1], [0, 1, 1]]}

LEFT_PAIR_DOC = {"kind": "left-pair", "l": 2, "n": 2,
                 "first": [[1, 0], [0, 0]], "second": [[0, 1], [0, 0]]}


def test_round_trip(tmp_path):
    for payload in (TUPLE_DOC, PAIR_DOC, LEFT_DOC, LEFT_PAIR_DOC):
        path = write(tmp_path, "doc.json", payload)
        doc = load_document(path)
        emitted = document_to_json(doc)
        path2 = write(tmp_path, "doc2.json", emitted)
        doc2 = load_document(path2)
        assert document_to_json(doc2) == emitted
        for key in doc:
            if key != "digest":
                assert doc[key] == doc2[key]


def test_invariants_command(tmp_path):
    path = write(tmp_path, "t.json", TUPLE_DOC)
    code, out, _ = run_cli(["invariants", path])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["count"] == 11
    assert report["result"]["values"][0] == {
        "indices": [1], "kind": "det", "value": "4"}


def test_invariants_zero_tuple(tmp_path):
    doc = {"kind": "lr-tuple", "n": 2,
           "matrices": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}
    path = write(tmp_path, "z.json", doc)
    code, out, _ = run_cli(["invariants", path])
    assert code == 0
    assert all(v["value"] == "0" for v in json.loads(out)["result"]["values"])


def test_separate_command(tmp_path):
    path = write(tmp_path, "p.json", PAIR_DOC)
    code, out, _ = run_cli(["separate", path])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["separated"] is True
    assert result["witness"] == {"kind": "det", "indices": [1]}
    assert result["values"] == ["2", "12"]


def test_determinism_byte_identical(tmp_path):
    path = write(tmp_path, "t.json", TUPLE_DOC)
    _, out1, _ = run_cli(["invariants", path])
    _, out2, _ = run_cli(["invariants", path])
    assert out1 == out2
    _, c1, _ = run_cli(["certify", "--n", "4", "--claims", "cr-cc",
                        "--trials", "2", "--seed", "9"])
    _, c2, _ = run_cli(["certify", "--n", "4", "--claims", "cr-cc",
                        "--trials", "2", "--seed", "9"])
    assert c1 == c2


def test_exit_code_2_on_bad_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(["invariants", str(bad)])
    assert code == 2 and "input error" in err

    code, _, _ = run_cli(["invariants", str(tmp_path / "missing.json")])
    assert code == 2

    decimal = write(tmp_path, "dec.json", {
        "kind": "lr-tuple", "n": 1, "matrices": [[[0.5, 1], [0, 1]]]})
    code, _, err = run_cli(["invariants", decimal])
    assert code == 2

    mismatch = write(tmp_path, "mm.json", {
        "kind": "lr-pair", "n": 2,
        "first": [[[1, 0], [0, 1]]], "second": [[[1, 0], [0, 1]]]})
    code, _, _ = run_cli(["separate", mismatch])
    assert code == 2


def test_exit_code_3_on_precondition(tmp_path):
    # separated pair is not in the separating variety: classify refuses
    path = write(tmp_path, "p.json", PAIR_DOC)
    code, _, err = run_cli(["classify", path])
    assert code == 3 and "precondition" in err


def test_certify_command_success():
    code, out, _ = run_cli(["certify", "--n", "4", "--claims", "gamma",
                            "--trials", "2", "--seed", "0"])
    assert code == 0
    assert json.loads(out)["result"]["certificates"][0]["verdict"] == "CERTIFIED"


def test_exit_code_4_on_certification_failure(monkeypatch):
    import matsep.cli as cli
    from matsep.certify import DimensionCertificate

    def fake(n=None, l=None, names=None, trials=5, seed=0):
        return [DimensionCertificate("gamma", 22, 17, trials, None,
                                     "LOWER_BOUND_ONLY")]

    monkeypatch.setattr(cli, "certify_builtin", fake)
    code, out, err = run_cli(["certify", "--n", "4", "--claims", "gamma"])
    assert code == 4
    assert "certification failure" in err
    # the report is still emitted for inspection
    assert json.loads(out)["result"]["certificates"][0]["verdict"] == "LOWER_BOUND_ONLY"


def test_counts_command():
    code, out, _ = run_cli(["counts", "--n", "6"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result == {"dim": 18, "generators": 36, "lower_bound": 21, "n": 6}

    code, out, _ = run_cli(["counts", "--n", "5", "--l", "3"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result == {"dim": 7, "generators": 10, "l": 3, "lower_bound": 8, "n": 5}


def test_identities_command():
    code, out, _ = run_cli(["identities"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result == {"bracket_identity": True, "xi_identity": True}


def test_stability_command(tmp_path):
    stable_doc = {"kind": "lr-tuple", "n": 3, "matrices": [
        [[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]}
    path = write(tmp_path, "s.json", stable_doc)
    code, out, _ = run_cli(["stability", path])
    assert code == 0
    assert json.loads(out)["result"]["stable"] is True

    path = write(tmp_path, "l.json", LEFT_DOC)
    code, out, _ = run_cli(["stability", path])
    assert json.loads(out)["result"]["stable"] is True


def test_nullcone_command(tmp_path):
    doc = {"kind": "lr-tuple", "n": 1, "matrices": [[[0, 1], [0, 0]]]}
    path = write(tmp_path, "n.json", doc)
    code, out, _ = run_cli(["nullcone", path])
    assert code == 0 and json.loads(out)["result"]["member"] is True


def test_phi_command(tmp_path):
    path = write(tmp_path, "p.json", PAIR_DOC)
    code, out, _ = run_cli(["phi", path])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["B"] == [[["-1", "3"], ["-4", "2"]]]
    assert result["separated"] is True
    assert result["nullcone_member"] is False


def test_graph_and_curve_commands(tmp_path):
    path = write(tmp_path, "lp.json", LEFT_PAIR_DOC)
    code, out, _ = run_cli(["graph", path])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["necessary"] is True and result["member"] is True

    code, out, _ = run_cli(["curve", path])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["verified"] is True and result["limits_match"] is True

    upper_pair = {"kind": "lr-pair", "n": 2,
                  "first": [[[1, 2], [0, 3]], [[0, 1], [0, 5]]],
                  "second": [[[1, 2], [0, 3]], [[0, 1], [0, 5]]]}
    path = write(tmp_path, "up.json", upper_pair)
    code, out, _ = run_cli(["graph", path])
    assert code == 0
    assert json.loads(out)["result"]["member"] is True


def test_text_format_deterministic(tmp_path):
    path = write(tmp_path, "t.json", TUPLE_DOC)
    code, out1, _ = run_cli(["invariants", path, "--format", "text"])
    _, out2, _ = run_cli(["invariants", path, "--format", "text"])
    assert code == 0 and out1 == out2 and "count: 11" in out1


def test_certify_left_family_cli():
    code, out, _ = run_cli(["certify", "--l", "2", "--n", "3",
                            "--trials", "3", "--seed", "1"])
    assert code == 0
    certs = json.loads(out)["result"]["certificates"]
    assert {c["name"]: c["achieved_rank"] for c in certs} == {
        "gamma-left": 9, "nullcone-left": 4, "nullcone-pair-left": 8,
        "z-left": 8}
    assert all(c["verdict"] == "CERTIFIED" for c in certs)


def test_counts_minimal_n():
    code, out, _ = run_cli(["counts", "--n", "1"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result == {"dim": 1, "generators": 1, "lower_bound": 1, "n": 1}


def test_graph_separated_upper_pair_is_precondition_error(tmp_path):
    doc = {"kind": "lr-pair", "n": 1,
           "first": [[[1, 0], [0, 2]]], "second": [[[1, 0], [0, 3]]]}
    path = write(tmp_path, "sep.json", doc)
    code, _, err = run_cli(["graph", path])
    assert code == 3 and "precondition" in err


def test_curve_rank_violation_is_precondition_error(tmp_path):
    doc = {"kind": "left-pair", "l": 3, "n": 4,
           "first": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]],
           "second": [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]}
    path = write(tmp_path, "lp.json", doc)
    code, _, err = run_cli(["curve", path])
    assert code == 3 and "stacked rank" in err


def test_module_entry_point():
    import subprocess
    import sys
    out1 = subprocess.run([sys.executable, "-m", "matsep", "counts", "--n", "4"],
                          capture_output=True, text=True)
    out2 = subprocess.run([sys.executable, "-m", "matsep", "counts", "--n", "4"],
                          capture_output=True, text=True)
    assert out1.returncode == 0
    assert out1.stdout == out2.stdout  # byte-identical across processes
    assert json.loads(out1.stdout)["result"]["lower_bound"] == 11
