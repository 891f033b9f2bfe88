import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[int, list[tuple[str, bool]]] = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    # one entry per test: a failure in any phase counts, a passing call counts once
    if report.failed or (report.when == "call" and report.passed):
        _CRITERIA[marker.args[0]].append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        results = _CRITERIA[number]
        failed = [name for name, ok in results if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {number:>2}: {status} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
