import json

import pytest

from diassoc.cli import GAP, INPUT_ERROR, NEGATIVE, OK, UNSUPPORTED, main


@pytest.fixture
def doc(tmp_path):
    def write(text, name="a.alg"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_check_assoc(doc, capsys):
    assert main(["check-assoc", doc("field GF(5)\nmsc 0 0 0 0 | 1 0 0 0")]) == OK
    assert capsys.readouterr().out.strip() == "associative: true"
    assert main(["check-assoc", doc("field GF(5)\nmsc 0 1 1 0 | 1 1 1 4")]) == NEGATIVE
    out = capsys.readouterr().out
    assert out.startswith("associative: false (fails equation")


def test_check_dia(doc, capsys):
    path = doc("field GF(2)\ndialgebra\nleft 0 1 1 0 | 1 0 0 1\nright 0 1 1 0 | 1 0 0 1")
    assert main(["check-dia", path, "--format", "json"]) == OK
    d = json.loads(capsys.readouterr().out)
    assert d["diassociative"] and all(d[f"axiom{i}"] for i in range(1, 6))
    bad = doc("field GF(5)\ndialgebra\nleft 1 0 0 0 | 0 0 0 0\nright 1 0 0 0 | 0 0 1 0")
    assert main(["check-dia", bad]) == NEGATIVE
    assert "diassociative: false" in capsys.readouterr().out


def test_classify(doc, capsys):
    assert main(["classify", doc("field GF(5)\nmsc 1 0 0 0 | 0 0 0 0"), "--format", "json"]) == OK
    assert capsys.readouterr().out.strip() == '{"label":"As3^2","params":[],"char_class":"not23"}'
    assert main(["classify", doc("field GF(5)\nmsc 3 0 0 3 | 0 3 3 0")]) == OK
    assert capsys.readouterr().out.strip() == "As3^5(2)"


def test_classify_gap(doc, capsys):
    path = doc("field GF(3)\ndialgebra\nleft 0 0 0 0 | 0 0 0 0\nright 0 0 0 0 | 1 0 0 0")
    assert main(["classify", path]) == GAP
    assert "CLASSIFICATION-GAP" in capsys.readouterr().err


def test_classify_over_q(doc, capsys):
    assert main(["classify", doc("field Q\nmsc 1 0 0 0 | 0 1 0 0")]) == OK
    assert capsys.readouterr().out.strip() == "As3^3"
    assert main(["classify", doc("field Q\nmsc 1 0 0 0 | 0 0 1 0")]) == NEGATIVE


def test_aut(doc, capsys):
    assert main(["aut", doc("field GF(5)\nmsc 0 0 0 0 | 1 0 0 0"), "--format", "json"]) == OK
    d = json.loads(capsys.readouterr().out)
    assert d["order"] == 20 and len(d["elements"]) == 20 and not d["truncated"]
    assert main(["aut", doc("field GF(5)\nmsc 0 0 0 0 | 0 0 0 0")]) == OK
    out = capsys.readouterr().out
    assert out.startswith("order: 480") and "380 more" in out
    assert main(["aut", doc("field Q\nmsc 0 0 0 0 | 1 0 0 0")]) == UNSUPPORTED


def test_iso(doc, capsys):
    a = doc("field GF(5)\nmsc 3 0 0 1 | 0 3 3 0", "a")
    b = doc("field GF(5)\nmsc 3 0 0 4 | 0 3 3 0", "b")
    c = doc("field GF(5)\nmsc 3 0 0 2 | 0 3 3 0", "c")
    assert main(["iso", a, b]) == OK
    assert capsys.readouterr().out.startswith("isomorphic: witness")
    assert main(["iso", a, c]) == NEGATIVE
    assert capsys.readouterr().out.strip() == "not isomorphic"
    d = doc("field GF(7)\nmsc 0 0 0 0 | 1 0 0 0", "d")
    assert main(["iso", a, d]) == INPUT_ERROR


def test_census(capsys):
    assert main(["census", "--field", "GF(2)", "--kind", "assoc", "--format", "json"]) == OK
    d = json.loads(capsys.readouterr().out)
    assert d["complete"] and d["disjoint"] and d["classes"] == 7
    assert main(["census", "--field", "GF(11)", "--kind", "assoc"]) == UNSUPPORTED
    assert main(["census", "--field", "GF(6)", "--kind", "assoc"]) == INPUT_ERROR


def test_reps(capsys):
    assert main(["reps", "--field", "GF(5)", "--kind", "assoc", "--format", "json"]) == OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["family"] for r in rows] == ["As13^1", "As3^2", "As3^3", "As3^4", "As3^5", "As3^5", "As3^5"]
    assert set(rows[0]) == {"family", "char_class", "kind", "params", "msc", "side_conditions"}
    assert main(["reps", "--field", "GF(3)", "--kind", "dia", "--format", "json"]) == OK
    assert "dimsc" in json.loads(capsys.readouterr().out)[0]
    assert main(["reps", "--field", "Q", "--kind", "general"]) == OK
    assert "A11" in capsys.readouterr().out


def test_input_errors(doc, capsys):
    assert main(["check-assoc", doc("field GF(5)\nmsc 0 0 | 0")]) == INPUT_ERROR
    assert "line 2, column" in capsys.readouterr().err
    assert main(["check-assoc", "/nonexistent/file"]) == INPUT_ERROR
    assert main(["bogus"]) == INPUT_ERROR
