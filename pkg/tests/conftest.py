from functools import lru_cache

import pytest

from quintic_nodes.census import census


@lru_cache(maxsize=None)
def cached_census(n: int):
    return census(n)


@pytest.fixture(scope="session")
def census8():
    return cached_census(8)


@pytest.fixture(scope="session")
def census_of():
    return cached_census


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    crit = item.get_closest_marker("criterion")
    if crit is None or call.when != "call":
        return
    number, title = crit.args
    status = "FAIL" if call.excinfo is not None else "PASS"
    prev = ACCEPTANCE.get(number)
    if prev is None or prev[0] == "PASS":
        ACCEPTANCE[number] = (status, title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
