import random
import sys

import pytest

from maxplanar.generate import generate_all
from maxplanar.graph import Graph
from maxplanar.triangulation import bipyramid, extend_wheel3, icosahedron, octahedron, tetrahedron

# bipyramid() ids: apexes a, b and equator e1, e2, e3
A, B, E1, E2, E3 = 0, 1, 2, 3, 4


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


def stacked(n: int):
    """Stacked triangulation built from K4 by always filling face (0, 1, last)."""
    t = tetrahedron()
    while t.order < n:
        t = extend_wheel3(t, (0, 1, t.order - 1))
    return t


def g7():
    """Octahedron with a vertex added in the face (0, 1, 2)."""
    return extend_wheel3(octahedron(), (0, 1, 2))


def corpus(max_order: int, min_order: int = 4):
    return [t for n in range(min_order, max_order + 1) for t in generate_all(n).graphs]


@pytest.fixture
def b5():
    return bipyramid()


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture(scope="session")
def ico():
    return icosahedron()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
