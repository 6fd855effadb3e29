import pytest

_criteria: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, text): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _criteria.append((str(marker.args[0]), marker.args[1], outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid, text, outcome in sorted(_criteria, key=lambda c: int(c[0])):
        terminalreporter.write_line(f"{outcome} criterion {cid:>2}: {text}")
