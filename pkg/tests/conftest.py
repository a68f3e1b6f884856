import pytest

_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        number, title = marker.args
        failed = report.failed
        if report.when == "call" or failed:
            previous = _criteria.get(number, (title, "PASS"))[1]
            status = "FAIL" if failed or previous == "FAIL" else "PASS"
            if report.skipped:
                status = "SKIP"
            _criteria[number] = (title, status)
    return report


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"{status} criterion {number:>2}: {title}")
