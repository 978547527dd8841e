import json

import numpy as np
import pytest

from zbw_lab.verify import MODULES, Check, CheckRegistry, Comparison, registry, verify


def test_relative_deviation():
    comparison = Comparison(expected=[2.0, -4.0], actual=[2.0, -3.0], tolerance=0.5)
    assert comparison.deviation() == pytest.approx(0.25)


def test_zero_expectation_falls_back_to_absolute():
    assert Comparison(expected=0.0, actual=1e-3, tolerance=1e-2).deviation() == pytest.approx(1e-3)


def test_absolute_deviation_with_complex_values():
    comparison = Comparison(expected=np.array([1j, 0.0]), actual=np.array([1.1j, 0.0]), tolerance=0.2, mode="absolute")
    assert comparison.deviation() == pytest.approx(0.1)


def test_unknown_mode():
    with pytest.raises(ValueError):
        Comparison(expected=1.0, actual=1.0, tolerance=0.0, mode="ulp").deviation()


def test_check_outcomes():
    passing = Check("ok", "spinor-algebra", "anchor", lambda: Comparison(1.0, 1.0 + 1e-12, 1e-9)).run()
    assert passing.passed and passing.deviation == pytest.approx(1e-12)

    failing = Check("bad", "spinor-algebra", "anchor", lambda: False).run()
    assert not failing.passed and failing.error is None

    def boom():
        raise RuntimeError("no convergence")

    raised = Check("boom", "spinor-algebra", "anchor", boom).run()
    assert not raised.passed
    assert raised.error == "RuntimeError: no convergence"


def test_informational_failures_do_not_fail_report():
    checks = CheckRegistry()
    checks.register(Check("audit", "graphene-zbw", "uncorrected form", lambda: Comparison(1.0, 2.0, 1e-3, informational=True)))
    checks.register(Check("exact", "graphene-zbw", "identity", lambda: True))
    report = checks.run("graphene-zbw")
    assert report.passed
    assert [c.name for c in report.checks] == ["audit", "exact"]
    assert report.checks[0].informational and not report.checks[0].passed


def test_registry_rejects_duplicates_and_unknown_modules():
    checks = CheckRegistry()
    checks.register(Check("one", "dirac-packet", "", lambda: True))
    with pytest.raises(ValueError):
        checks.register(Check("one", "dirac-packet", "", lambda: True))
    with pytest.raises(ValueError):
        checks.register(Check("two", "astrology", "", lambda: True))
    with pytest.raises(ValueError):
        checks.run("astrology")
    assert checks.modules() == ["dirac-packet"]


def test_every_module_has_checks():
    assert registry.modules() == list(MODULES)
    assert "alpha_clifford" in registry.list("spinor-algebra")


@pytest.mark.parametrize("suite", ["constants-units", "spinor-algebra", "nc-phase-space", "nc-momentum-landau"])
def test_cheap_suites_pass(suite):
    report = verify(suite)
    assert report.checks
    assert report.failed == [], [(c.name, c.deviation, c.error) for c in report.failed]
    assert all(c.module == suite for c in report.checks)


def test_report_json():
    report = verify("spinor-algebra", metadata={"run": "unit-test"})
    payload = json.loads(report.to_json())
    assert payload["passed"] is True
    assert payload["metadata"]["suite"] == "spinor-algebra"
    assert payload["metadata"]["run"] == "unit-test"
    assert payload["metadata"]["rng"] == "PCG64"
    assert report.to_json().endswith("}\n")


@pytest.mark.slow
def test_full_suite_passes_and_serializes():
    report = verify("all")
    assert {c.module for c in report.checks} == set(MODULES)
    assert report.failed == [], [(c.module, c.name, c.deviation, c.error) for c in report.failed]
    payload = json.loads(report.to_json())
    assert payload["passed"] is True
    assert len(payload["checks"]) == len(report.checks)
    assert [c["name"] for c in payload["checks"]] == [c.name for c in report.checks]


def test_check_names_are_unique_across_modules():
    names = registry.list()
    assert len(names) == len(set(names))
    assert {"moment_oracle", "nc_moment_oracle"} <= set(names)
