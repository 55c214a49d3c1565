import pytest

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(tag, title): one numbered acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    tag, title = mark.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    # setup, call and teardown all report; any failure sticks
    if _acceptance.get(tag, ("", "PASS"))[1] == "PASS":
        _acceptance[tag] = (title, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(_acceptance, key=lambda t: int(t[2:])):
        title, outcome = _acceptance[tag]
        terminalreporter.write_line(f"{tag:<5} {title:<52} {outcome}")
    passed = sum(o == "PASS" for _, o in _acceptance.values())
    terminalreporter.write_line(f"{passed}/{len(_acceptance)} criteria passed")
