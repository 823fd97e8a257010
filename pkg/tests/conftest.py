"""Collects per-criterion outcomes of the acceptance tests for a summary."""
from collections import defaultdict

_outcomes = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _titles[m.args[0]] = m.args[1]


def pytest_runtest_makereport(item, call):
    m = item.get_closest_marker("criterion")
    if m and call.when == "call":
        failed = call.excinfo is not None and not call.excinfo.errisinstance(
            __import__("pytest").skip.Exception)
        _outcomes[m.args[0]].append((item.name, not failed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_outcomes):
        results = _outcomes[n]
        bad = [name for name, ok in results if not ok]
        status = "FAIL" if bad else "PASS"
        line = f"{status} criterion {n}: {_titles[n]} ({len(results) - len(bad)}/{len(results)} checks)"
        if bad:
            line += " failing: " + ", ".join(bad)
        tr.write_line(line)
