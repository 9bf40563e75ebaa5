import random

import pytest

from sombor._accel import HAVE_NUMBA
from sombor.graph import random_graph

BACKENDS = ["numpy"] + (["numba"] if HAVE_NUMBA else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20221018)


def random_graphs(rng, count, n_min=1, n_max=12):
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        yield random_graph(n, rng.random(), rng)


def to_nx(G):
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
