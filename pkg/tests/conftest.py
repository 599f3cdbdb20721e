import sys

import pytest

from rtinterp import programs

sys.path.insert(0, __file__.rsplit("/", 1)[0])

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, text = marker.args
    # several tests may share a criterion; it passes only if all of them do
    prev = _criteria.get(number, (text, True))
    if report.when == "call" or report.failed:
        _criteria[number] = (text, prev[1] and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")


@pytest.fixture(scope="session")
def fibo():
    return programs.get("fibo")


@pytest.fixture(scope="session")
def square():
    return programs.get("square")


@pytest.fixture(scope="session")
def factorial():
    return programs.get("factorial")
