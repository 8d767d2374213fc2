from pathlib import Path

import pytest
from hypothesis import settings

from fuzzybridge import pct

settings.register_profile("ci", max_examples=300, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile("ci")

DATA = Path(__file__).resolve().parents[1] / "src" / "fuzzybridge" / "data"

# Scores listed for the two Patras clubs (one event) and for men/women (tournament totals).
C1 = ["62.67", "57.94", "56.04", "55.28", "50.43", "46", "44.75", "39.91", "36.16"]
C2 = ["63.14", "57.64", "56.86", "50.17", "50.13", "43.28", "42.11", "36.63"]
MEN = ["57.22", "54.77", "54.77", "54.35", "54.08", "50.82", "50.82", "49.61", "47.82"]
WOMEN = ["59.48", "54.08", "53.45", "53.45", "47.39"]


def scores(texts):
    return [pct(t) for t in texts]


@pytest.fixture
def data_dir():
    return DATA


_criteria: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[name] = "PASS" if rep.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        terminalreporter.write_line(f"[{_criteria[name]}] {name}")
