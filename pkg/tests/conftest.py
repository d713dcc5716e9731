import pytest

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(ident, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    ident, title = marker.args
    _criteria[ident] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for ident in sorted(_criteria, key=lambda s: int(s.lstrip("C"))):
        title, verdict = _criteria[ident]
        terminalreporter.write_line(f"{verdict}  {ident:>3}  {title}")
