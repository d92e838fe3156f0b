import pytest

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (label, detail) once the checks ran."""
    name = request.node.name
    state = {"label": name, "detail": ""}

    def note(label: str, detail: str = "") -> None:
        state["label"], state["detail"] = label, detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    outcome = "PASS" if rep is not None and rep.passed else "FAIL"
    _ACCEPTANCE[name] = (outcome, f"{state['label']} {state['detail']}".strip())


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        outcome, text = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{outcome}  {text}")
