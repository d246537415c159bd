"""Prints a one-line PASS/FAIL summary for the tests marked ``acceptance``."""

import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): end-to-end acceptance check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    key = mark.args
    if rep.failed or rep.skipped:
        _results[key] = "FAIL"
    elif rep.when == "call" and _results.get(key) != "FAIL":
        _results[key] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance")
    for (num, title), status in sorted(_results.items(), key=lambda kv: int(kv[0][0])):
        tr.write_line(f"{status}  {num:>2}. {title}")
    passed = sum(s == "PASS" for s in _results.values())
    tr.write_line(f"{passed}/{len(_results)} acceptance checks pass")
