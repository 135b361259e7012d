"""Verification reports and their JSON / CSV / text serialisations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
DOCUMENTED_DELTA = "documented-delta"
STATUSES = (PASS, FAIL, DOCUMENTED_DELTA)
FORMATS = ("json", "csv", "text")


def _scalar(value: Any) -> Any:
    # numpy scalars expose item(); anything else is not serialisable
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"cannot serialise {type(value).__name__}")


def _plain(value: Any) -> Any:
    """Reduce a value to plain JSON types (tuples become lists)."""
    return json.loads(json.dumps(value, default=_scalar))


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    status: str
    note: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        self.expected = _plain(self.expected)
        self.actual = _plain(self.actual)

    @classmethod
    def equal(cls, name: str, expected: Any, actual: Any, note: str = "") -> Check:
        expected, actual = _plain(expected), _plain(actual)
        return cls(name, expected, actual, PASS if expected == actual else FAIL, note)


@dataclass
class VerificationReport:
    suite: str
    parameters: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    runtime_ms: int = 0
    seed: int | None = None

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "suite": report.suite,
        "parameters": report.parameters,
        "checks": [asdict(c) for c in report.checks],
        "runtime_ms": report.runtime_ms,
        "seed": report.seed,
    }


def parse_report(data: bytes | str) -> VerificationReport:
    doc = json.loads(data)
    return VerificationReport(
        suite=doc["suite"],
        parameters=doc["parameters"],
        checks=[Check(**c) for c in doc["checks"]],
        runtime_ms=doc["runtime_ms"],
        seed=doc["seed"],
    )


def _cell(value: Any) -> str:
    return value if isinstance(value, str) else json.dumps(value)


def emit_report(report: VerificationReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "expected", "actual", "status"])
        for c in report.checks:
            writer.writerow([c.name, _cell(c.expected), _cell(c.actual), c.status])
        return buf.getvalue().encode()
    if fmt == "text":
        lines = [f"suite {report.suite}  parameters {json.dumps(report.parameters, sort_keys=True)}"]
        for c in report.checks:
            line = f"[{c.status.upper()}] {c.name}: expected={_cell(c.expected)} actual={_cell(c.actual)}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        counts = {s: sum(c.status == s for c in report.checks) for s in STATUSES}
        lines.append(" ".join(f"{s}={k}" for s, k in counts.items()) + f" runtime_ms={report.runtime_ms}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
