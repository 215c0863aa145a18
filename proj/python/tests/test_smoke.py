import json

import pytest

import qlorentz as ql


def test_normalize_reorders_da():
    assert ql.normalize("d*a") == "a*d - (q - q^-1)*b*c"
    assert ql.normalize("d*a", reduce=True) == "1 + q^-1*b*c"


def test_parse_tree_keeps_order():
    assert ql.parse_tree("q^(1/2)*a*b - b*a") == "(+ (* q^(1/2) a b) (- (* b a)))"


def test_syntax_error_is_value_error():
    with pytest.raises(ValueError, match="1:3"):
        ql.normalize("a b")
    with pytest.raises(ValueError, match="unknown generator"):
        ql.Poly("a*x1")


def test_poly_arithmetic_and_centrality():
    det = ql.Poly("a*d - q*b*c")
    assert str(det) == "a*d - q*b*c"
    for g in "abcd":
        assert det.commutator(ql.Poly(g)).is_zero()
    assert (ql.Poly("a") * ql.Poly("b") - ql.Poly("q*b*a")).is_zero()
    assert det.reduce() == ql.Poly("1")
    assert ql.Poly("x1*x2", spec="plane") == ql.Poly("q*x2*x1", spec="plane")


def test_poly_json_and_terms():
    p = ql.Poly("2*a*b + i")
    assert json.loads(p.to_json())[0] == {"word": [], "coeff": [[0, 0, 1, 1, 1]]}
    assert p.terms()[1] == (["a", "b"], "2")


def test_verify_reports_items():
    report = ql.verify("sldet")
    assert report["passed"]
    assert {i["id"] for i in report["items"]} >= {"sldet.center-a", "sldet.antipode"}
    broken = ql.verify("sldet", mutate="da-sign")
    assert not broken["passed"]


def test_sigma_suite_reports_metric_conflict():
    failed = {i["id"] for i in ql.verify("sigma")["items"] if not i["passed"]}
    assert "sigma.eta-reference" in failed
    assert "sigma.completeness" not in failed


def test_emit_and_dmatrix():
    d = json.loads(ql.emit("dmatrix", j="1"))
    assert d["basis"] == "unnormalized" and d["j"] == "1"
    assert ql.dmatrix("1/2") == [["a", "b"], ["c", "d"]]
    assert ql.dmatrix("3/2") == ql.dmatrix("3/2", closed_form=True)
    sigma = json.loads(ql.emit("sigma", q=1.0))
    assert sigma[3]["entries"][1][1] == [-1.0, 0.0]
    with pytest.raises(ValueError):
        ql.emit("dmatrix", j="1/3")


def test_eta_differs_from_reference_only_at_one_entry():
    computed, reference = ql.eta(), ql.reference_eta()
    diff = [(r, c) for r in range(4) for c in range(4) if computed[r][c] != reference[r][c]]
    assert diff == [(3, 0)]


def test_q_combinatorics():
    assert ql.basic_integer(2) == "q + 1"
    assert ql.q_binomial(2, 1) == "q + 1"
