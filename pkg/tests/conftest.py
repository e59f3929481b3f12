import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "passed": True, "duration": 0.0})
    if report.when == "call":
        entry["duration"] += report.duration
    if report.failed or report.skipped:
        entry["passed"] = False
    entry["notes"] = [value for key, value in item.user_properties if key == "note"]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"criterion {number:2d} {status}  {entry['title']} ({entry['duration']:.2f} s)"
        for note in entry.get("notes", []):
            line += f"; {note}"
        terminalreporter.write_line(line)
