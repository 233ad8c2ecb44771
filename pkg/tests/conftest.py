from __future__ import annotations

import pytest

_results: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        if _results.get(name, ("PASS",))[0] == "FAIL":
            status = "FAIL"  # parametrized criteria fail if any case fails
        _results[name] = (status, item.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results, key=lambda n: int(n.split()[0][2:])):
        status, _ = _results[name]
        terminalreporter.write_line(f"{status}  {name}")
