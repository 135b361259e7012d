from __future__ import annotations

import csv
import io
import json

import numpy as np
import pytest

from fllmetric.errors import CapacityError, UsageError
from fllmetric.report import (
    DOCUMENTED_DELTA,
    FAIL,
    PASS,
    Check,
    VerificationReport,
    emit_report,
    parse_report,
)
from fllmetric.suites import SUITES, run_suite


def sample(status: str = PASS) -> VerificationReport:
    checks = [Check.equal("a", 1, 1), Check("b", "3", "3", status, note="why")]
    return VerificationReport("demo", {"m": 2, "n_max": 4}, checks, runtime_ms=12, seed=None)


def test_check_equal_status():
    assert Check.equal("x", [1, 2], (1, 2)).status == PASS
    assert Check.equal("x", 1, 2).status == FAIL
    assert Check.equal("x", np.int64(3), 3).status == PASS


def test_check_rejects_unknown_status():
    with pytest.raises(ValueError):
        Check("x", 1, 1, "maybe")


def test_exit_codes():
    assert sample().exit_code == 0
    assert sample(DOCUMENTED_DELTA).exit_code == 0
    assert sample(FAIL).exit_code == 1


def test_empty_report_is_valid_json():
    doc = json.loads(emit_report(VerificationReport("demo", {}), "json"))
    assert doc["checks"] == []
    assert set(doc) == {"suite", "parameters", "checks", "runtime_ms", "seed"}


@pytest.mark.parametrize("status", [PASS, DOCUMENTED_DELTA])
def test_json_round_trip(status):
    r = sample(status)
    assert parse_report(emit_report(r, "json")) == r


def test_csv_columns():
    rows = list(csv.reader(io.StringIO(emit_report(sample(), "csv").decode())))
    assert rows[0] == ["name", "expected", "actual", "status"]
    assert len(rows) == 3
    assert rows[1] == ["a", "1", "1", "pass"]


def test_text_format():
    text = emit_report(sample(DOCUMENTED_DELTA), "text").decode()
    assert "[PASS] a: expected=1 actual=1" in text
    assert "[DOCUMENTED-DELTA] b" in text and "(why)" in text
    assert "pass=1 fail=0 documented-delta=1" in text


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(sample(), "xml")


def test_unknown_suite():
    with pytest.raises(UsageError):
        run_suite("nope")


def test_capacity_error_names_parameter():
    with pytest.raises(CapacityError, match="m\\^n"):
        run_suite("ball-formula", {"m": 2, "n_min": 10, "n_max": 10}, max_space=2**8)


SMALL = {
    "ball-formula": {"m": 2, "n_max": 6},
    "extremal": {"m": 2, "n_max": 6, "formula_n_max": 30, "closed_form_n_max": 6},
    "average": {"m": 2, "n_max": 5},
    "anticodes": {"n_max": 5},
    "codes": {"n_max": 4, "trials": 20, "random_n_max": 5},
    "metric-axioms": {"m": 2, "n_max": 5},
    "intersections": {"m": 2, "n_max": 6},
}


def test_every_suite_has_small_parameters():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_small_suites_have_no_failures(name):
    r = run_suite(name, SMALL[name])
    assert r.checks and not r.failed
    assert r.suite == name
    assert (r.seed is not None) == (name == "codes")


def test_average_suite_marks_documented_delta():
    r = run_suite("average", {"m": 2, "n_max": 4})
    deltas = [c for c in r.checks if c.status == DOCUMENTED_DELTA]
    assert deltas and all("delta=" in c.note for c in deltas)
    assert {c.status for c in r.checks} == {PASS, DOCUMENTED_DELTA}
