import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion with a wall-clock limit in seconds")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title, limit = marker
    _criteria[number] = {"title": title, "limit": limit, "passed": report.passed, "seconds": report.duration}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        c = _criteria[number]
        status = "PASS" if c["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {c['title']}  ({c['seconds']:.2f}s, limit {c['limit']}s)")
    passed = sum(c["passed"] for c in _criteria.values())
    terminalreporter.write_line(f"{passed}/{len(_criteria)} criteria passed")
