import pytest
from hypothesis import settings

from bcmatroid.constructions import Graph, graphic, uniform
from bcmatroid.sweep import family_matroids

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# K_{2,3}: top 0, bottom 1, middle vertices 2 (left), 3 (centre), 4 (right)
K23_EDGES = ((0, 3, 1), (3, 1, 2), (0, 2, 3), (0, 4, 4), (4, 1, 5), (2, 1, 6))


@pytest.fixture
def k23():
    return graphic(Graph(5, K23_EDGES))


@pytest.fixture
def triangle():
    return graphic(Graph.from_pairs([(0, 1), (1, 2), (2, 0)]))


@pytest.fixture(scope="session")
def graphic7():
    return list(family_matroids("graphic", max_edges=7))


@pytest.fixture(scope="session")
def uniform8():
    return list(family_matroids("uniform", max_n=8))


@pytest.fixture(scope="session")
def small_corpus():
    """Connected graphs up to 5 edges and uniform matroids up to 5 elements."""
    items = list(family_matroids("graphic", max_edges=5))
    items += [(f"U({r},{n})", uniform(r, n)) for n in range(1, 6) for r in range(1, n + 1)]
    return items


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
