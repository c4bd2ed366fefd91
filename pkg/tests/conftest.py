"""Collects acceptance-criterion outcomes and prints one line per criterion."""

from collections import defaultdict

import pytest

_outcomes = defaultdict(list)
_TITLES = {
    1: "C_4 minus energy by both routes",
    2: "closed-form surd energies",
    3: "family coefficient formulas",
    4: "three coefficient engines agree",
    5: "minimal energy at desk scale",
    6: "maximal energy at desk scale",
    7: "Coulson and spectral routes agree",
    8: "switching invariance",
    9: "quasi-order monotonicity",
    10: "pendant edge recurrence",
}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        status = "PASS" if all(_outcomes[k]) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d} {status}  {_TITLES.get(k, '')} ({len(_outcomes[k])} checks)")
