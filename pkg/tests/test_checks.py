"""Tests for the named check-suite registry and its runner."""

import pytest

from torsorlab.checks import SUITES, SuiteNotApplicable, list_suites, run_all, run_suite
from torsorlab.fields import PrimeField, Rationals, field_from_spec
from torsorlab.reports import CheckConfig, Report


def test_registry_shape():
    rows = list_suites()
    assert len(rows) == len(SUITES)
    names = [name for name, _, _ in rows]
    assert names == list(SUITES)
    assert len(set(names)) == len(names)
    for name, module, description in rows:
        assert name and module and description
        assert name == name.lower()
        assert " " not in name


def test_every_suite_runs_or_declines_f3():
    """Each suite either returns passing reports or refuses with a reason."""
    f3 = PrimeField(3)
    cfg = CheckConfig(trials=8, seed=0)
    for name in SUITES:
        try:
            reports = run_suite(name, f3, 2, cfg)
        except SuiteNotApplicable:
            continue
        assert reports, name
        for r in reports:
            assert isinstance(r, Report)
            assert r.failures == 0, (name, r.law, r.first_counterexample)


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("no-such-suite", PrimeField(3), 2, CheckConfig())


def test_run_all_collects_and_skips():
    """run_all never raises; inapplicable suites produce skip reports."""
    rat = Rationals()
    reports = run_all(rat, 2, CheckConfig(trials=6, seed=1))
    assert reports
    skipped = [r for r in reports if r.law == "skipped"]
    assert skipped, "infinite fields must skip the enumeration suites"
    for r in reports:
        if r.law == "skipped":
            assert any(n.startswith("skipped:") for n in r.notes)
        else:
            assert r.failures == 0, (r.suite, r.law, r.first_counterexample)


def test_finite_only_suites_decline_infinite_fields():
    rat = Rationals()
    cfg = CheckConfig(trials=4, seed=0)
    for name in ("hull-closure", "lagrangian-census", "semitorsor-closure"):
        with pytest.raises(SuiteNotApplicable):
            run_suite(name, rat, 2, cfg)


def test_even_ambient_suites_decline_odd_ambient():
    f3 = PrimeField(3)
    cfg = CheckConfig(trials=4, seed=0)
    with pytest.raises(SuiteNotApplicable):
        run_suite("involution-duality", f3, 3, cfg)


def test_reports_carry_suite_names():
    f2 = PrimeField(2)
    cfg = CheckConfig(trials=5, seed=2)
    for name in ("field-axioms", "global-laws", "m-symmetries"):
        for r in run_suite(name, f2, 2, cfg):
            assert r.suite == name


def test_report_keys_unique_within_run():
    """Suite, law, and notes together identify every report of one run."""
    f2 = PrimeField(2)
    reports = run_all(f2, 2, CheckConfig(trials=5, seed=3))
    keys = [(r.suite, r.law, r.notes) for r in reports]
    assert len(keys) == len(set(keys))


def test_exhaustive_flagship_run():
    """The full exhaustive sweep over the smallest field passes everywhere."""
    f2 = field_from_spec("f2")
    reports = run_all(f2, 2, CheckConfig(exhaustive=True))
    assert len(reports) >= 90
    bad = [(r.suite, r.law) for r in reports if r.failures]
    assert not bad
    assert not [r for r in reports if r.law == "skipped"]
