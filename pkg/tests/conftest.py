import pytest

from soficzeta.corpus import hand_graphs, random_corpus
from soficzeta.graph import adjacency_matrix, is_irreducible
from soficzeta.presentation import minimize_right_resolving

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def hand():
    return hand_graphs()


@pytest.fixture(scope="session")
def randoms():
    return random_corpus(24)


@pytest.fixture(scope="session")
def corpus(hand, randoms):
    """Hand graphs plus the seeded random ones; all right-resolving and essential."""
    return list(hand.values()) + randoms


@pytest.fixture(scope="session")
def irreducible_corpus(corpus):
    return [g for g in corpus if is_irreducible(adjacency_matrix(g))]


@pytest.fixture(scope="session")
def minimal_corpus(corpus):
    return [minimize_right_resolving(g) for g in corpus]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
