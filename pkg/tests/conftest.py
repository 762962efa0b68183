import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from argagg.frameworks import catalog, complex_af, simple_af, tree_af  # noqa: E402
from argagg.rules import LabelingProfile  # noqa: E402


@pytest.fixture
def af_s():
    return simple_af()


@pytest.fixture
def af_c():
    return complex_af()


@pytest.fixture
def af_g():
    return tree_af()


@pytest.fixture
def l1(af_s):
    return af_s.labeling({"A": "in", "B": "out", "C": "in"})


@pytest.fixture
def l2(af_s):
    return af_s.labeling({"A": "out", "B": "in", "C": "out"})


@pytest.fixture
def p64(af_s, l1, l2):
    return LabelingProfile.of(af_s, [l1] * 6 + [l2] * 4)


@pytest.fixture
def p91(af_s, l1, l2):
    return LabelingProfile.of(af_s, [l1] * 9 + [l2])


SMALL_CATALOG = {name: af for name, af in catalog().items() if len(af) <= 4}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


_CRITERIA: list[tuple[int, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA.append((marker.args[0], marker.args[1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, verdict in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if verdict == 'PASSED' else 'FAIL'}] criterion {number}: {title}")
