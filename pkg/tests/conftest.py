import pytest

_RESULTS: dict = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome; the summary prints every line."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        _RESULTS[number] = (title, bool(ok), detail)
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}"
        print(line + (f" [{detail}]" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        title, ok, detail = _RESULTS[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title}"
        terminalreporter.write_line(line + (f" [{detail}]" if detail else ""))
    passed = sum(ok for _, ok, _ in _RESULTS.values())
    terminalreporter.write_line(f"{passed}/{len(_RESULTS)} acceptance criteria pass")
