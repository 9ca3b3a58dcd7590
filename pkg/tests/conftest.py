import pytest
from hypothesis import strategies as st

from partition_support.partitions import iter_partitions


@st.composite
def partitions(draw, min_n=1, max_n=30):
    """A random partition, built from a random multiset of parts."""
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_n), min_size=1, max_size=8))
    lam = tuple(sorted(parts, reverse=True))
    total = sum(lam)
    if total < min_n:
        lam = lam + (1,) * (min_n - total)
    return tuple(sorted(lam, reverse=True))


@pytest.fixture(scope="session")
def partitions_by_n():
    return {n: list(iter_partitions(n)) for n in range(0, 21)}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, label = results[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {label}")
