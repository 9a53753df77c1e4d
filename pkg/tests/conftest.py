"""Shared pytest hooks: the acceptance criteria summary block.

Tests marked ``@pytest.mark.acceptance(number, name)`` get one
``ACCEPTANCE <number> <name>: PASS|FAIL`` line in the terminal summary,
independent of output capture settings.
"""

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(number, name): labels one acceptance criterion")
    config._acceptance_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, name = marker.args
    results = item.config._acceptance_results
    if report.when == "call":
        results[number] = (name, report.passed)
    elif report.failed:  # setup or teardown error
        results[number] = (name, False)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        name, passed = results[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number} {name}: {status}")
