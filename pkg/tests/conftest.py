import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    crit = item.get_closest_marker("criterion")
    if crit is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    num, title = crit.args
    prev = ACCEPTANCE_RESULTS.get(num, ("PASS", title))[0]
    status = "PASS" if rep.passed and prev == "PASS" else "FAIL"
    ACCEPTANCE_RESULTS[num] = (status, title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS, key=int):
        status, title = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
