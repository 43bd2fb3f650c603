"""Suite runner mechanics: registry, seeding, crash capture, report shape."""

import pytest

from gf3sets import run_suite
from gf3sets import suite
from gf3sets.primitive import CheckResult


def test_unknown_suite_name():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_registry_and_suite_contents():
    assert set(suite._STANDARD) <= set(suite._REGISTRY)
    assert set(suite._EXTENDED) == set(suite._REGISTRY)
    assert "verify_main_4" not in suite._STANDARD
    assert "verify_main_4" in suite._EXTENDED
    assert "dim4_sweep" in suite._EXTENDED


def test_crashing_check_is_a_counterexample(monkeypatch):
    def explode(rng):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(suite._REGISTRY, "tiny_crash", (explode, {}))
    monkeypatch.setattr(suite, "_STANDARD", ("tiny_crash",))
    rep = run_suite("standard")
    assert not rep.passed and rep.exit_code == 1
    (c,) = rep.checks
    assert c.status == "counterexample"
    assert "ZeroDivisionError" in c.detail


def test_not_applicable_does_not_pass(monkeypatch):
    def shrug(rng):
        return CheckResult.not_applicable("tiny_na", "nothing to say")

    monkeypatch.setitem(suite._REGISTRY, "tiny_na", (shrug, {}))
    monkeypatch.setattr(suite, "_STANDARD", ("tiny_na",))
    rep = run_suite("standard")
    assert not rep.passed  # a suite passes only when every check holds


def test_seed_and_samples_reach_the_checks(monkeypatch):
    def record(rng, samples=3):
        return CheckResult.holds("record", f"{rng.random():.6f}/{samples}")

    monkeypatch.setitem(suite._REGISTRY, "record", (record, {}))
    monkeypatch.setattr(suite, "_STANDARD", ("record",))
    a = run_suite("standard", seed=5)
    assert a.checks == run_suite("standard", seed=5).checks
    assert a.checks != run_suite("standard", seed=6).checks
    assert a.checks[0].detail.endswith("/3")
    assert run_suite("standard", seed=5, samples=9).checks[0].detail.endswith("/9")


def test_report_json_shape(monkeypatch):
    def ok(rng):
        return CheckResult.holds("tiny_ok")

    monkeypatch.setitem(suite._REGISTRY, "tiny_ok", (ok, {}))
    monkeypatch.setattr(suite, "_STANDARD", ("tiny_ok",))
    obj = run_suite("standard", seed=2).to_json()
    assert set(obj) == {"suite", "seed", "passed", "checks"}
    assert obj["seed"] == 2 and obj["passed"] is True
    assert obj["checks"][0]["name"] == "tiny_ok"
