import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from sgideals import Semigroup, parse_semigroup  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("ci", deadline=None)
settings.load_profile("ci")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def S3():
    return parse_semigroup((FIXTURES / "example2.sg").read_text())


@pytest.fixture
def L2():
    return parse_semigroup((FIXTURES / "left_zero2.sg").read_text())


@pytest.fixture
def N2():
    return parse_semigroup((FIXTURES / "null2.sg").read_text())


@pytest.fixture
def T1():
    return Semigroup.from_table([[0]], ["e"])


# acceptance criteria summary: one line per criterion

_criteria: dict = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        n, title = marker
        prev = _criteria.get(n, (title, True))
        _criteria[n] = (title, prev[1] and report.outcome == "passed")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (m.args[0], m.kwargs.get("title", item.name))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
