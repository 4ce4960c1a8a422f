import json

import pytest

from permlab import suites
from permlab.catalog import corpus_members
from permlab.suites import REQUIRED_IDS, SUITES, missing_suites, sample_seed
from permlab.verify import SCHEMA, VerifyOptions, run_member, run_suite


def test_registry_complete():
    assert missing_suites() == []
    assert set(REQUIRED_IDS) <= set(SUITES)


def test_suite_l2_1_on_s3():
    r = run_suite("L2.1", "S3")
    assert r.passed and r.failures == []
    assert r.corpus_size == 1 and r.checks_run > 0


def test_hypothesis_skips_are_not_failures():
    r = run_suite("T3.2", "S3,S4,A5")
    assert r.passed
    assert [i.group for i in r.skipped] == ["S4", "A5"]
    assert r.checks_run == 1


def test_fixture_suite():
    r = run_suite("E2.7", "example2.7,S3")
    assert r.passed
    assert [i.group for i in r.skipped] == ["S3"]


def test_unknown_suite_and_empty_corpus():
    with pytest.raises(KeyError):
        run_suite("T9.9", "S3")
    with pytest.raises(ValueError):
        run_suite("T3.1", "")


def test_cap_errors_are_reported_per_member():
    r = run_suite("T3.1", "S3,psl27,S4", VerifyOptions(max_order=100))
    assert [i.group for i in r.errors] == ["psl27"]
    assert r.passed and r.checks_run == 2


def test_broken_predicate_is_caught(monkeypatch):
    # the suites must be able to fail: sabotage Ore dispersiveness
    monkeypatch.setattr(suites, "is_ore_dispersive", lambda G: False)
    r = run_suite("P1.6", "S3,A4")
    assert not r.passed
    assert [i.group for i in r.failures] == ["S3"]


def test_exceptions_become_failures(monkeypatch):
    def boom(G):
        raise RuntimeError("kaput")

    monkeypatch.setattr(suites, "wU_local_check", boom)
    r = run_suite("T1.7-local", "S3")
    assert not r.passed
    assert "RuntimeError: kaput" in r.failures[0].detail


def test_sampling_is_seeded():
    assert sample_seed("L2.1", "psl27") == sample_seed("L2.1", "psl27")
    assert sample_seed("L2.1", "psl27") != sample_seed("L2.2", "psl27")
    m = corpus_members("psl27")[0]
    a = run_member("L2.1", m, 5000)
    b = run_member("L2.1", m, 5000)
    assert a == b


def test_report_json():
    r = run_suite("T3.1", "S3,wu-not-u")
    d = json.loads(r.to_json())
    assert d["schema"] == SCHEMA
    assert d["suite"] == "T3.1" and d["passed"] is True
    assert d["corpus_size"] == 2
    assert "elapsed" not in d and "jobs" not in d["config"]
    assert r.to_json() == run_suite("T3.1", "S3,wu-not-u").to_json()
    assert "PASS" in r.to_text()


def test_parallel_matches_serial():
    serial = run_suite("L2.2", "catalog", VerifyOptions(jobs=1))
    parallel = run_suite("L2.2", "catalog", VerifyOptions(jobs=2))
    assert serial.to_json() == parallel.to_json()


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_passes_on_small_corpus(suite):
    r = run_suite(suite, "S3,A4,D8,S4,example2.7")
    assert r.passed, r.failures
    assert r.checks_run + len(r.skipped) >= 1
