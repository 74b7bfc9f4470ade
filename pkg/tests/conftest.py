import pytest

from qwalg.catalog import named_catalog, orthomodular6, weakly_linear5
from qwalg.search import enumerate_qw


@pytest.fixture(scope="session")
def om6():
    return orthomodular6()


@pytest.fixture(scope="session")
def wl5():
    return weakly_linear5()


@pytest.fixture(scope="session")
def catalog():
    return named_catalog()


@pytest.fixture(scope="session")
def small_models():
    """Every QW algebra of order 1..4, as emitted by the search."""
    return {n: enumerate_qw(n).models for n in range(1, 5)}


@pytest.fixture(scope="session")
def corpus(catalog, small_models):
    out = dict(catalog)
    for n, models in small_models.items():
        for i, A in enumerate(models):
            out[f"search{n}_{i}"] = A
    return out


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
