import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

LONG = os.environ.get("BIRKHOFF_LONG") == "1"


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="long run; set BIRKHOFF_LONG=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.skipped):
        return
    if report.skipped and "test_acceptance" in report.nodeid and not report.user_properties:
        _CRITERIA.append(f"SKIP  {report.nodeid.split('::')[-1]} (opt-in, BIRKHOFF_LONG=1)")
        return
    for key, value in report.user_properties:
        if key == "criterion":
            status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
            _CRITERIA.append(f"{status}  {value}")


_CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
