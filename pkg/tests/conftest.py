import pytest

from hyperrational import get_game


@pytest.fixture
def g1():
    return get_game("g1")


@pytest.fixture
def g2():
    return get_game("g2")


@pytest.fixture
def g3():
    return get_game("g3")


@pytest.fixture
def chicken():
    return get_game("chicken")


@pytest.fixture
def pennies():
    return get_game("matching-pennies")


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion; any failing phase fails it."""
    status = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" not in nodeid:
                continue
            name = nodeid.split("::", 1)[1]
            ok = outcome == "passed"
            status[name] = status.get(name, True) and ok
    if status:
        terminalreporter.section("acceptance criteria")
        for name in sorted(status):
            terminalreporter.write_line(f"{'PASS' if status[name] else 'FAIL'}  {name}")
