"""End-to-end smoke tests for the _core extension module."""

import json
import os
import pathlib

import pytest

import _core

DATA = pathlib.Path(os.environ["INTCK_DATA_DIR"])


def read(rel):
    return (DATA / rel).read_text()


def test_parse_print_round_trip():
    f = _core.parse("p & q -> r")
    assert str(f) == "p & q -> r"
    assert _core.parse(str(f)) == f
    assert _core.atoms(_core.parse("q | p & q")) == ["p", "q"]
    assert str(_core.parse("<>p", dialect="modal")) == "<>p"


def test_parse_errors():
    with pytest.raises(_core.ParseError):
        _core.parse("p => q => r")
    with pytest.raises(_core.ParseError):
        _core.parse("[]p")  # modal operator in the conditional dialect
    with pytest.raises(ValueError):
        _core.parse("p", dialect="nope")


def test_model_eval_and_validation():
    model = read("models/prop5.json")
    assert _core.evaluate(model, "weiss", "v", _core.parse("T => F")) is True
    assert _core.evaluate(model, "weiss", "w", _core.parse("T => F")) is False
    assert _core.evaluate(model, "weiss", "w", _core.parse("~~(T => F)")) is True
    assert _core.validate_model(model, "weiss") == []
    assert [v["condition"] for v in _core.validate_model(model, "chellas")] == ["c1"]
    assert _core.extension(read("models/two_chain.json"), _core.parse("p")) == ["v"]
    with pytest.raises(_core.ModelFormatError):
        _core.validate_model("{}", "weiss")
    with pytest.raises(_core.EvalError):
        _core.evaluate(model, "weiss", "w", _core.parse("p ~> q"))


def test_countermodel_and_glue():
    excluded_middle = _core.parse("p | ~p")
    found = _core.countermodel(excluded_middle)
    assert found is not None
    pointed = json.loads(found)
    refuted = _core.evaluate(
        json.dumps(pointed["model"]), "int", pointed["world"], excluded_middle
    )
    assert refuted is False
    assert _core.countermodel(_core.parse("p -> p"), budget=500) is None

    model = read("models/two_chain.json")
    glued = json.loads(_core.glue(model, model))
    assert glued["world"] == "root"
    assert sorted(glued["model"]["worlds"]) == ["1:v", "1:w", "2:v", "2:w", "root"]


def test_corpus_and_porting():
    report = _core.check_corpus()
    assert len(report) >= 21
    assert all(ok for _, ok in report)
    script = _core.corpus_script("INTCK/T4_fwd")
    verdict = _core.check_proof(script)
    assert verdict["ok"]
    assert verdict["conclusion"] == "~(p ~> q) -> p => ~q"
    ported = _core.port_proof(script, "CK", "appendix_b")
    ported_verdict = _core.check_proof(ported)
    assert ported_verdict["ok"]
    assert ported_verdict["calculus"] == "CK"
    assert ported_verdict["conclusion"] == verdict["conclusion"]
    assert "appendix_b" in _core.bridges()


def test_translations():
    box = _core.parse("[](p -> q)", dialect="modal")
    assert str(_core.tr(box)) == "T => (p -> q)"
    assert _core.untr(_core.tr(box)) == box
    projected = _core.project_to_int(_core.parse("(p => q) & r"))
    assert _core.project_to_int(projected) == projected
    assert _core.st("x", _core.parse("p => q")) == (
        "exists _v0 (S(_v0) & ((forall _v1 (O(_v1) -> (E(_v1,_v0) <-> p(_v1))))"
        " & (forall _v2 (R(x,_v0,_v2) -> q(_v2)))))"
    )
    with pytest.raises(ValueError):
        _core.st("_v0", _core.parse("p"))


def test_sheaf_checks():
    sheaf = read("sheaves/chain2.json")
    assert _core.validate_sheaf(sheaf) == []
    assert _core.check_th(sheaf, ["p", "q", "r"]) == []
    assert _core.eval_st(sheaf, "w0", "a", _core.parse("p -> p")) is True
    assert _core.eval_st(sheaf, "w0", "a", _core.parse("p")) is False
    assert _core.eval_st(sheaf, "w1", "a", _core.parse("p")) is True
    with pytest.raises(_core.SheafFormatError):
        _core.validate_sheaf("{}")
