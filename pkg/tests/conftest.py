from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

SEED_WORDS = [("has", "verb"), ("hat", "noun"), ("man", "noun")]
TRACE_SENTENCES = ["the man has a hat", "a man has the hat", "the dog ate a biscuit"]

# (subject, verb, object, adjective) for the eight web-training sentences
WEB_SENTENCES = [
    "man|wears|hat|big@object",
    "man|throws|hat|small@object",
    "man|throws|ball|big@object",
    "man|bounces|ball|small@object",
    "man|wears|shoes|big@object",
    "man|throws|shoes|small@object",
    "man|uses|telephone|",
    "man|answers|telephone|",
]


@pytest.fixture
def data_dir():
    return DATA


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _criteria.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    merged = {}
    for num, title, outcome in _criteria:
        ok = merged.get(num, (title, True))[1] and outcome == "passed"
        merged[num] = (title, ok)
    terminalreporter.section("acceptance criteria")
    for num in sorted(merged):
        title, ok = merged[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}")
