import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, list] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    entry = _criteria.setdefault(number, [title, True, []])
    entry[1] = entry[1] and passed
    entry[2].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, names = _criteria[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({len(names)} checks)")


@pytest.fixture
def triangle():
    from simagg import full_simplex

    return full_simplex((0, 1, 2))


@pytest.fixture
def hollow_triangle():
    from simagg import boundary_complex

    return boundary_complex((0, 1, 2))
