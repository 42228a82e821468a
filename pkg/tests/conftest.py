import sys
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS: list[tuple[int, str, str, str]] = []


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.details: list[str] = []

    def note(self, text: str) -> None:
        self.details.append(text)


@contextmanager
def _run(number: int, title: str):
    c = _Criterion(number, title)
    try:
        yield c
    except pytest.skip.Exception as exc:
        _record(c, "SKIP", str(exc))
        raise
    except BaseException as exc:
        _record(c, "FAIL", f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    else:
        _record(c, "PASS", "; ".join(c.details))


def _record(c: _Criterion, status: str, detail: str) -> None:
    line = f"criterion {c.number} [{status}] {c.title}" + (f" ({detail})" if detail else "")
    _RESULTS.append((c.number, status, c.title, line))
    print(line)


@pytest.fixture
def criterion():
    return _run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, _, _, line in sorted(_RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(line)
