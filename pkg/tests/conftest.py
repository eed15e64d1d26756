"""Shared fixtures and the acceptance summary.

Tests marked ``@pytest.mark.acceptance(n, "title")`` are grouped by
criterion number; the terminal summary prints one PASS/FAIL line each.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from quadtile import Instance, QNum

_results: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_acceptance", None)
    if marker is None:
        return
    n, title = marker
    entry = _results.setdefault(n, {"title": title, "ok": True, "ran": False})
    if report.when == "call" or report.outcome != "passed":
        entry["ran"] = True
        if report.outcome != "passed":
            entry["ok"] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("acceptance")
    if m is not None:
        outcome.get_result()._acceptance = (m.args[0], m.args[1] if len(m.args) > 1 else "")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        e = _results[n]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        terminalreporter.write_line(f"AC{n} {e['title']}: {status}")


@pytest.fixture(scope="session")
def phi():
    return QNum(Fraction(1, 2), Fraction(1, 2), 5)


@pytest.fixture(scope="session")
def fig1():
    """Ratio, target and instance of the worked 26-tile example."""
    x1 = QNum(Fraction(1, 2), Fraction(1, 2), 5)
    z = QNum(Fraction(7, 24), Fraction(23, 24), 5)
    return x1, z, Instance(5, (x1,))

