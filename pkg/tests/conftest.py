import pytest

from heckered.rootsys import CartanType

ALL_TYPES = (
    [CartanType("A", n) for n in range(1, 9)]
    + [CartanType("B", n) for n in range(2, 9)]
    + [CartanType("C", n) for n in range(2, 9)]
    + [CartanType("D", n) for n in range(4, 9)]
    + [CartanType("E", n) for n in (6, 7, 8)]
    + [CartanType("F", 4), CartanType("G", 2)]
)

ALL_MAXIMAL = [(t, node) for t in ALL_TYPES for node in range(1, t.rank + 1)]

_verdicts: list[tuple[str, bool]] = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    name = request.node.get_closest_marker("criterion").args[0]

    def record(ok: bool):
        _verdicts.append((name, ok))
        return ok

    yield record
    if not any(n == name for n, _ in _verdicts):
        _verdicts.append((name, False))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker and call.when == "call" and call.excinfo is not None:
        name = marker.args[0]
        _verdicts[:] = [(n, ok) for n, ok in _verdicts if n != name]
        _verdicts.append((name, False))


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _verdicts:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
