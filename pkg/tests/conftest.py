import pytest

from dispbook.corpus import build_corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    """The 210-graph acceptance corpus: seeded random gluings of Theta, doubled C4, cube and hexagonal prism."""
    return build_corpus(210, seed=0, max_pieces=7)


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [entry for entry in corpus if entry.graph.n <= 12]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
