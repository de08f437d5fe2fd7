import logging

import pytest

from catalan_parity import verification
from catalan_parity.utils import MAX_N_ENV, Parity
from catalan_parity.verification import (
    Suite,
    asymptotics_suite,
    oracle_suite,
    parity_suite,
    run_suite,
    series_suite,
)


@pytest.fixture(autouse=True)
def _default_caps(monkeypatch):
    monkeypatch.delenv(MAX_N_ENV, raising=False)


def _failed(checks):
    return [c for c in checks if not c.passed]


def test_parity_suite_passes():
    checks = parity_suite(128)
    assert len(checks) == 13
    assert _failed(checks) == []
    assert all(c.suite is Suite.PARITY for c in checks)


def test_parity_suite_reports_scope():
    checks = parity_suite(32)
    assert checks[0].scope == "1 <= n <= 32"


def test_parity_suite_needs_two_terms():
    with pytest.raises(ValueError):
        parity_suite(1)


def test_series_suite_passes():
    checks = series_suite(24)
    assert _failed(checks) == []
    assert {c.scope for c in checks} == {"0 <= k <= 24"}


def test_series_suite_non_integral_closed_form(mocker):
    mocker.patch.object(
        verification.series,
        "expand_A_closed_form",
        side_effect=ArithmeticError("coefficient of x^3 is not an integer"),
    )
    checks = series_suite(8)
    assert len(checks) == 1
    assert not checks[0].passed


def test_asymptotics_suite_needs_seven_terms():
    with pytest.raises(ValueError):
        asymptotics_suite(6)


def test_failed_checks_are_logged(mocker, caplog):
    mocker.patch.object(
        verification.parity, "predicted_parity", return_value=Parity.EVEN
    )
    with caplog.at_level(logging.ERROR, logger="catalan_parity.verification"):
        checks = run_suite(Suite.PARITY, 16)
    failed = _failed(checks)
    assert failed
    assert failed[0].detail == "first failure at n=1"
    assert any("FAILED parity" in r.getMessage() for r in caplog.records)


def test_run_suite_accepts_string_names():
    checks = run_suite("series", 8)
    assert checks and all(c.suite is Suite.SERIES for c in checks)


@pytest.mark.slow
def test_oracle_suite_defaults():
    checks = oracle_suite()
    assert _failed(checks) == []
    names = [c.name for c in checks]
    assert any("five-variable" in name for name in names)
    assert checks[0].scope == "1 <= n <= 8"


@pytest.mark.slow
def test_oracle_suite_clips_truth_table_range(caplog):
    with caplog.at_level(logging.INFO, logger="catalan_parity.verification"):
        checks = oracle_suite(12)
    assert checks[0].scope == "1 <= n <= 10"
    assert any("clipped" in r.getMessage() for r in caplog.records)


@pytest.mark.slow
def test_asymptotics_suite_defaults():
    assert _failed(asymptotics_suite()) == []


@pytest.mark.slow
def test_parity_suite_defaults():
    checks = parity_suite()
    assert _failed(checks) == []
    assert checks[0].scope == "1 <= n <= 4096"


def test_all_suites_cap_series_and_asymptotics(mocker):
    runners = {suite: mocker.Mock(return_value=[]) for suite in verification.SUITES}
    mocker.patch.dict(verification.SUITES, runners)
    run_suite(Suite.ALL, 4096)
    assert runners[Suite.ORACLE].call_args.args[0] == 4096
    assert runners[Suite.PARITY].call_args.args[0] == 4096
    assert runners[Suite.SERIES].call_args.args[0] == verification.DEFAULT_SERIES_K
    assert (
        runners[Suite.ASYMPTOTICS].call_args.args[0]
        == verification.DEFAULT_ASYMPTOTIC_N
    )


def test_single_suite_takes_max_n_as_given(mocker):
    runner = mocker.Mock(return_value=[])
    mocker.patch.dict(verification.SUITES, {Suite.SERIES: runner})
    run_suite(Suite.SERIES, 200)
    assert runner.call_args.args[0] == 200
