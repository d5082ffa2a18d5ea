import json

import pytest

from wittalg import veritas
from wittalg.veritas import (FAIL, PASS, SKIPPED, Config, REGISTRY, UnknownClaim, claim_ids,
                             run_all, run_claim)


@pytest.fixture(scope="module")
def full_report():
    return run_all(Config())


def test_every_claim_passes(full_report):
    bad = [(c.id, c.details) for c in full_report.claims if c.status != PASS]
    assert not bad
    assert full_report.passed


def test_report_sorted_and_complete(full_report):
    ids = [c.id for c in full_report.claims]
    assert ids == sorted(ids) == claim_ids()
    assert len(ids) == len(REGISTRY)


def test_json_schema(full_report):
    doc = json.loads(full_report.to_json())
    assert set(doc) == {"tool_version", "config", "claims"}
    for c in doc["claims"]:
        assert set(c) == {"id", "reference", "status", "expected", "computed", "elapsed_ms",
                          "details"}


def test_deterministic_modulo_timing(full_report):
    again = run_all(Config())
    assert again.to_json(timing=False) == full_report.to_json(timing=False)


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        run_claim("no-such-claim")
    with pytest.raises(UnknownClaim):
        run_all(Config(claims=("p-value", "bogus")))


def test_exclude_witt_skips():
    rep = run_all(Config(exclude_witt=True, claims=("witt-ad-g4", "p-value")))
    status = {c.id: c.status for c in rep.claims}
    assert status == {"witt-ad-g4": SKIPPED, "p-value": PASS}
    assert rep.passed


def test_truncation_is_noted():
    res = run_claim("kernel-a0-ideal", Config(max_degree=5))
    assert res.status == PASS
    assert any("truncated" in d for d in res.details)
    assert len(res.computed["equal"]) == 5


def test_mismatch_is_reported(monkeypatch):
    spec = REGISTRY["p-value"]

    def wrong(cfg, notes):
        exp, comp = spec.runner(cfg, notes)
        exp = dict(exp, p="y^3*z")
        return exp, comp

    monkeypatch.setitem(REGISTRY, "p-value", veritas.ClaimSpec("p-value", spec.reference, wrong))
    res = run_claim("p-value")
    assert res.status == FAIL
    assert res.details[0].startswith("first mismatch: p")


def test_crash_is_a_failure(monkeypatch):
    def boom(cfg, notes):
        raise RuntimeError("boom")

    monkeypatch.setitem(REGISTRY, "p-value", veritas.ClaimSpec("p-value", "x", boom))
    res = run_claim("p-value")
    assert res.status == FAIL and "boom" in res.details[0]


def test_parallel_matches_serial():
    ids = ("p-value", "witt-ad-g", "geom-f", "q-commutator")
    a = run_all(Config(claims=ids, jobs=3)).to_json(timing=False)
    b = run_all(Config(claims=ids)).to_json(timing=False)
    assert a.replace('"jobs": 3', '"jobs": 1') == b


def test_table_rendering(full_report):
    table = full_report.to_table()
    assert table.splitlines()[-1].startswith(f"{len(REGISTRY)} passed, 0 failed")
