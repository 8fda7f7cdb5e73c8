"""Collects acceptance-criterion outcomes and prints them after the run."""

import pytest

ACCEPTANCE: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    crit = item.get_closest_marker("criterion")
    if crit is None or rep.when != "call" and not rep.failed:
        return
    k = crit.args[0]
    verdict = "PASS" if rep.passed else "FAIL"
    if ACCEPTANCE.get(k) != "FAIL":
        ACCEPTANCE[k] = verdict


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {k:2d}: {ACCEPTANCE[k]}")
