import pytest

ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    name = request.node.name
    yield
    report = getattr(request.node, "rep_call", None)
    ACCEPTANCE[name] = "PASS" if report is not None and report.passed else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[name]}  {name}")
