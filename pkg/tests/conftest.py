from collections import defaultdict

import pytest

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[mark.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_outcomes):
        results = _outcomes[n]
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        detail = f"{len(results) - len(failed)}/{len(results)} checks"
        if failed:
            detail += "; failing: " + ", ".join(failed)
        tr.write_line(f"criterion {n:2d}: {status} ({detail})")
