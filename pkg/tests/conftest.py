import pytest

from leibalg.catalog import FamilySpec, build
from leibalg.exactfield import GF, Q


@pytest.fixture
def cor_a3():
    return build(FamilySpec("cor_a", GF(3), p=3, variant="leibniz"))


@pytest.fixture
def heis2():
    return build(FamilySpec("heisenberg", GF(2)))


@pytest.fixture
def heisq():
    return build(FamilySpec("heisenberg", Q))


@pytest.fixture
def cyc3():
    return build(FamilySpec("cyclic_leibniz", GF(3), n=2))


def vec(*xs):
    return tuple(xs)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
