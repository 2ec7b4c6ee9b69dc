from collections import defaultdict

import pytest

_results = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[mark.args[0]].append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        outcomes = _results[k]
        failed = [name for name, o in outcomes if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {k}: {status} ({len(outcomes) - len(failed)}/{len(outcomes)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
