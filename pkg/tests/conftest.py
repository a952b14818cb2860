import pathlib
import sys

import pytest

from sextor import build_chain, build_pointed_sets, ideal_from_objects

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def ps2():
    return build_pointed_sets(2)


@pytest.fixture(scope="session")
def ps3():
    return build_pointed_sets(3)


@pytest.fixture(scope="session")
def z1():
    return build_pointed_sets(1)


@pytest.fixture(scope="session")
def n2(ps2):
    return ideal_from_objects(ps2, ["P1"])


@pytest.fixture(scope="session")
def n3(ps3):
    return ideal_from_objects(ps3, ["P1"])


@pytest.fixture(scope="session")
def nz(z1):
    return ideal_from_objects(z1, ["P1"])


@pytest.fixture(scope="session")
def ch3():
    return build_chain(3)


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)


def pytest_terminal_summary(terminalreporter):
    # one verdict line per acceptance criterion that ran
    mod = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(k))
