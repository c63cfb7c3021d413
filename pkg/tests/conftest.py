"""Shared test fixtures for the knot-graphs test suite."""

from __future__ import annotations

import os

import pytest

from knotgraph.atlas import reset_atlas
from knotgraph.config import ENV_PREFIX, reset_config
from knotgraph.knots import UNKNOT, clear_cover_cache, named, torus
from knotgraph.metricgraph import MetricGraph

# ============================================================================
# Global State
# ============================================================================


@pytest.fixture(autouse=True)
def clean_state(monkeypatch):
    """Run every test against default configuration and the built-in atlas."""
    for key in list(os.environ):
        if key.startswith(ENV_PREFIX):
            monkeypatch.delenv(key)
    reset_config()
    reset_atlas()
    clear_cover_cache()
    yield
    reset_config()
    reset_atlas()
    clear_cover_cache()


# ============================================================================
# Knot Fixtures
# ============================================================================


@pytest.fixture
def trefoil():
    """T(2,3)."""
    return torus(2, 3)


@pytest.fixture
def stevedore():
    """The slice knot 6_1."""
    return named("6_1")


@pytest.fixture
def whitehead_double():
    """The positive untwisted Whitehead double of the trefoil."""
    return named("Wh")


@pytest.fixture(
    params=[
        UNKNOT,
        torus(2, 3),
        torus(-2, 5),
        torus(3, 4),
        torus(2, 9) + torus(2, 15),
    ],
    ids=["U", "T(2,3)", "m(T(2,5))", "T(3,4)", "T(2,9)+T(2,15)"],
)
def torus_sum(request):
    """Parametrized fixture over sums of torus knots."""
    return request.param


# ============================================================================
# Graph Fixtures
# ============================================================================


@pytest.fixture
def square():
    """The 4-cycle, with four-point delta 1."""
    return MetricGraph.cycle_graph(4)


@pytest.fixture
def grid_graph():
    """A 4x4 grid, the standard non-tree example."""
    import networkx as nx

    return MetricGraph(nx.convert_node_labels_to_integers(nx.grid_2d_graph(4, 4)))


@pytest.fixture
def graph_file(tmp_path):
    """Write an edge list to a temporary file and return its path."""

    def write(text: str, name: str = "graph.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def square_file(graph_file):
    """Edge-list file of the labelled 4-cycle ``a b c d``."""
    return graph_file("# square\na b\nb c\nc d\nd a\n")
