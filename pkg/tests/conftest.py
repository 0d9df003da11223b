"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import re

_criteria: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.failed:
        if report.failed:
            _criteria[n] = "FAIL"
        else:
            _criteria.setdefault(n, "PASS" if report.passed else "SKIP")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n:2d}: {_criteria[n]}")
