import json

import pytest
from fastapi.testclient import TestClient

from fibmod5 import catalog
from fibmod5.catalog import arm_flip_mutant, get_family
from fibmod5.models import (
    EvalRequest,
    SeriesRequest,
    VerifyReport,
    VerifyRequest,
    parse_range,
)
from fibmod5.service import app, run_eval, run_list, run_series, run_verify

client = TestClient(app)


def test_parse_range():
    assert parse_range("1..50") == (1, 50)
    assert parse_range("-20..20") == (-20, 20)
    with pytest.raises(ValueError):
        parse_range("5..1")
    with pytest.raises(ValueError):
        parse_range("1-50")


def test_healthz():
    assert client.get("/healthz").json() == {"status": "ok"}


def test_families_endpoint_sorted_and_filtered():
    r = client.get("/families")
    assert r.status_code == 200
    ids = [f["id"] for f in r.json()["families"]]
    assert ids == sorted(ids)
    assert "thm1-lucas" in ids and "lemma1" in ids and "last1" in ids

    r = client.get("/families", params={"select": "gib-*"})
    assert [f["id"] for f in r.json()["families"]] == ["gib-th11", "gib-th7", "gib-thm1"]

    r = client.get("/families", params={"select": "no-such-*"})
    assert r.status_code == 400


def test_list_includes_anchors():
    resp = run_list(["thm1-lucas"])
    assert resp.families[0].anchor == "Theorem 1"
    kinds = {f.id: f.kind for f in run_list(["*"]).families}
    assert kinds["z1mhbc2"] == "numeric"
    assert kinds["series1-ber"] == "series"
    assert kinds["cor9-equalities"] == "exact"


def test_verify_endpoint_roundtrip_and_determinism():
    req = {"select": ["thm1-*", "cor10", "last1"], "n_range": "1..12", "t_range": "-3..3"}
    r1 = client.post("/verify", json=req)
    r2 = client.post("/verify", json=req)
    assert r1.status_code == 200
    assert r1.text == r2.text  # byte-identical for identical config
    report = VerifyReport.model_validate_json(r1.text)
    assert report.ok
    assert VerifyReport.model_validate_json(report.model_dump_json()) == report
    sections = json.loads(r1.text)
    assert set(sections) == {"run_config", "families", "numeric", "series"}
    assert all(isinstance(f["checked"], str) for f in sections["families"])


def test_verify_rejects_bad_config():
    # 422 = model validation, 400 = handler validation; both are usage errors.
    assert client.post("/verify", json={"n_range": "9..1"}).status_code == 422
    assert client.post("/verify", json={"select": ["thm1-lucas"], "n_range": "0..5"}).status_code == 400
    assert client.post("/verify", json={"select": ["nothing-matches"]}).status_code == 400
    assert client.post("/verify", json={"terms": 0}).status_code == 422
    assert client.post("/verify", json={"gib_seeds": ["3;7"]}).status_code == 400


def test_verify_workers_do_not_change_bytes():
    req = {"select": ["waring1-lucas"], "n_range": "1..25", "t_range": "-4..4"}
    a = client.post("/verify", json=req).text
    b = client.post("/verify", json=dict(req, workers=3)).text
    ja, jb = json.loads(a), json.loads(b)
    assert ja["families"] == jb["families"]


def test_injected_counterexample_is_reported():
    broken = arm_flip_mutant(get_family("thm1-lucas"), 2)
    registry = dict(catalog.REGISTRY)
    registry[broken.id] = broken
    report = run_verify(VerifyRequest(select=[broken.id], n_range="1..10", t_range="-2..2"),
                        registry=registry)
    assert not report.ok
    fam = report.families[0]
    assert fam.first_counterexample is not None
    assert fam.first_counterexample.n == "2"


def test_eval_endpoint():
    r = client.post("/eval", json={"family_id": "thm1-lucas", "n": 2, "t": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["clauses"][0]["lhs"] == "4"
    assert body["clauses"][0]["rhs"] == "4"
    assert "2 or 3" in body["clauses"][0]["rhs_arm"]
    assert client.post("/eval", json={"family_id": "nope", "n": 2}).status_code == 400
    assert client.post("/eval", json={"family_id": "thm1-lucas", "n": 0}).status_code == 400


def test_eval_gibonacci_seeds():
    resp = run_eval(EvalRequest(family_id="gib-th7", n=5, t=0, gib="3,7"))
    assert resp.clauses[0].lhs == "6"
    assert resp.clauses[0].rhs == "6"
    with pytest.raises(catalog.ParameterError):
        run_eval(EvalRequest(family_id="gib-th7", n=5, t=0))


def test_series_endpoint():
    r = client.post("/series", json={"family": "last1", "terms": 30, "tol": 1e-12})
    assert r.status_code == 200
    body = r.json()
    assert body["report"]["passed"] is True
    assert len(body["rows"]) == 30
    assert client.post("/series", json={"family": "nope"}).status_code == 400


def test_series_resolution_field():
    resp = run_series(SeriesRequest(family="series2-ber2", m=0, terms=70, tol=1e-10))
    assert resp.report.passed
    assert resp.report.resolution and "9^k" in resp.report.resolution


def test_run_verify_exact_only_selection():
    report = run_verify(VerifyRequest(select=["cor*"], n_range="1..15", t_range="-2..2"))
    assert report.ok
    assert report.numeric == [] or all(r.check_id.startswith("cor10") for r in report.numeric)
    assert {f.family_id for f in report.families} >= {"cor1-fib-f2k", "cor9-equalities"}


def test_gib_families_get_one_report_per_seed():
    report = run_verify(VerifyRequest(select=["gib-th7"], n_range="1..10", t_range="-2..2"))
    assert [f.gib for f in report.families] == ["0,1", "2,1", "3,7", "-2,5"]
