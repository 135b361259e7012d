from __future__ import annotations

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    key = int(match.group(1))
    if report.when == "call" or report.failed:
        status = "PASS" if report.passed else "FAIL"
        if _results.get(key, (None, "PASS"))[1] == "FAIL":
            status = "FAIL"
        _results[key] = (match.group(2).replace("_", " "), status)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        name, status = _results[key]
        terminalreporter.write_line(f"criterion {key:2d} {name}: {status}")
