"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_outcomes: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    if report.when == "call" or report.failed:
        status = "PASS" if report.passed else "FAIL"
        detail = getattr(item, "criterion_detail", "")
        _outcomes[number] = (status, title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        status, title, detail = _outcomes[number]
        line = f"[{status}] criterion {number:>2}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
    passed = sum(s == "PASS" for s, _, _ in _outcomes.values())
    terminalreporter.write_line(f"{passed}/{len(_outcomes)} criteria passed")
