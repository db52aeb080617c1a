import pytest

_RESULTS = pytest.StashKey()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (report.when == "call" or report.failed):
        return
    n, text = marker.args
    entry = item.config.stash.setdefault(_RESULTS, {}).setdefault(n, [text, 0, 0])
    entry[1] += 1
    entry[2] += report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n, (text, total, passed) in sorted(results.items()):
        verdict = "PASS" if passed == total else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {text}  ({passed}/{total} cases)")
