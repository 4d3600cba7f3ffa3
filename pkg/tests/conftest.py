import pytest

_criterion_results = []


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        marker = item.get_closest_marker("criterion")
        if marker:
            _criterion_results.append((marker.args[0], marker.args[1], rep.passed))
    return rep


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed in sorted(_criterion_results):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"CRITERION {num}: {verdict} - {title}")
