import random

import pytest


ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        ACCEPTANCE_RESULTS[report.nodeid] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (outcome, duration) in sorted(ACCEPTANCE_RESULTS.items()):
        name = nodeid.split("::")[-1]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")


@pytest.fixture
def rng():
    return random.Random(20240601)


