import sys

import pytest

from partnorm import fixtures as fx
from partnorm.partition import build_partition


@pytest.fixture(scope="session")
def t7():
    universe = fx.table7_universe()
    return universe, build_partition(universe)


@pytest.fixture(scope="session")
def t2():
    universe = fx.table2_universe()
    return universe, build_partition(universe)


@pytest.fixture(scope="session")
def researchers():
    return {r.record_id: r for r in fx.table6_records()}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
