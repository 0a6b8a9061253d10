import pytest

_RESULTS = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (label) before the checks run."""
    entry = {"label": request.node.name, "detail": ""}
    _RESULTS.append(entry)

    def describe(label, detail=""):
        entry["label"], entry["detail"] = label, detail

    yield describe
    call = getattr(request.node, "rep_call", None)
    entry["ok"] = call is not None and call.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _RESULTS:
        status = "PASS" if entry.get("ok") else "FAIL"
        terminalreporter.write_line(f"[{status}] {entry['label']} {entry['detail']}".rstrip())
