import json

import jsonschema
import pytest

from flexmeadow.cli import main

LITERAL = {"type": "string"}
SCHEMA = {
    "type": "object",
    "required": ["model", "results", "seed", "timestamp"],
    "additionalProperties": False,
    "properties": {
        "model": {"type": "string"},
        "seed": {"type": "integer"},
        "timestamp": {"type": "string"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["law", "catalog", "status", "samples",
                             "effective_samples", "counterexample"],
                "properties": {
                    "law": {"type": "string"},
                    "catalog": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "error"]},
                    "samples": {"type": "integer"},
                    "effective_samples": {"type": "integer"},
                    "error": {"type": "string"},
                    "counterexample": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "required": ["bindings", "lhs", "rhs"],
                                "properties": {
                                    "bindings": {"type": "object", "additionalProperties": LITERAL},
                                    "lhs": LITERAL,
                                    "rhs": LITERAL,
                                },
                            },
                        ]
                    },
                },
            },
        },
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_ffp_exhaustive(capsys):
    code, out, _ = run(capsys, "check", "--model", "ffp:5", "--catalog", "involutive", "--exhaustive")
    assert code == 0
    assert "10/10 laws passed" in out


def test_check_rhat_common(capsys):
    code, _, _ = run(capsys, "check", "--model", "rhat-common", "--catalog", "common",
                     "--samples", "2000", "--seed", "7")
    assert code == 0


def test_check_reports_fi8(capsys):
    code, out, _ = run(capsys, "check", "--model", "external", "--catalog", "flexible",
                       "--samples", "10000", "--seed", "42")
    assert code == 1
    lines = {l.split()[0]: l for l in out.splitlines() if l.startswith("FI")}
    assert "FAIL" in lines["FI8"]
    assert all("PASS" in l for k, l in lines.items() if k != "FI8")


def test_json_validates_and_is_reproducible(tmp_path, capsys):
    docs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        code, _, _ = run(capsys, "check", "--model", "external", "--catalog", "distributivity-variants",
                         "--samples", "3000", "--seed", "9", "--json", str(path))
        assert code == 1
        doc = json.loads(path.read_text())
        jsonschema.validate(doc, SCHEMA)
        doc.pop("timestamp")
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]
    results = {r["law"]: r for r in json.loads(docs[0])["results"]}
    assert results["DIST-classical"]["status"] == "fail"
    assert results["FI8-corrected"]["status"] == "pass"
    assert results["SUBDIST"]["counterexample"] is None


def test_json_to_stdout(capsys):
    code, out, _ = run(capsys, "check", "--model", "ffp-common:3", "--exhaustive", "--json", "-")
    assert code == 0
    doc = json.loads(out[out.index("{"):])
    jsonschema.validate(doc, SCHEMA)
    assert len(doc["results"]) == 14


@pytest.mark.parametrize("argv", [
    ["check", "--model", "ffp:4"],
    ["check", "--model", "reals"],
    ["check", "--catalog", "nope"],
    ["check", "--model", "external", "--exhaustive"],
    ["check", "--samples", "0"],
    ["eval", "x*-y", "--bind", "x=1", "--bind", "y=1"],
    ["eval", "x + y", "--bind", "x=1"],
    ["eval", "x", "--bind", "x=1 +"],
    ["eval", "x", "--bind", "garbage"],
    ["eval", "err"],
    ["eval", "x", "--model", "rhat-common", "--bind", "x=1 ; L"],
    ["decompose", "cut(1,ajar)"],
    ["quotient", "1 ; o", "2 ;"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "x^-1", "--bind", "x=2 ; o")
    assert code == 0 and out.strip() == "1/2 ; o"
    code, out, _ = run(capsys, "eval", "0^-1", "--model", "ffp-common:3")
    assert out.strip() == "E"
    code, out, _ = run(capsys, "eval", "x^-1", "--model", "ffp:5", "--bind", "x=2")
    assert out.strip() == "3"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "cut(1,closed)")
    assert code == 0 and out.strip() == "r=e^1, I=L"
    _, out, _ = run(capsys, "decompose", "full")
    assert out.strip().endswith("I=full")


def test_quotient(capsys):
    _, out, _ = run(capsys, "quotient", "1", "0 ; o")
    assert out.strip() == "empty"
    _, out, _ = run(capsys, "quotient", "1 ; o", "2 ; o")
    assert out.strip() == "1/2 ; o"
    _, out, _ = run(capsys, "quotient", "0 ; o", "0 ; o")
    assert out.strip() == "0 ; L"


def test_list_axioms(capsys):
    code, out, _ = run(capsys, "--list-axioms")
    assert code == 0
    for law_id in ("I10", "M14", "FI8", "FIL", "N-symm", "VNR-mul", "SUBDIST"):
        assert law_id in out
    code, out2, _ = run(capsys, "check", "--list-axioms")
    assert out2 == out


def test_no_command(capsys):
    code, _, _ = run(capsys)
    assert code == 2
