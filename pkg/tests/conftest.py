import pytest

_criteria: dict[str, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label, text = marker.args
        status = "PASS" if report.outcome == "passed" else "FAIL"
        _criteria.setdefault(label, []).append((status, text))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(s.split("-")[0]), s)):
        for status, text in _criteria[label]:
            terminalreporter.write_line(f"criterion {label}: {status}  {text}")
