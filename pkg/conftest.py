import pytest
import django

# Configure Django settings before any service imports
import os
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'comfortable_teams.settings')
django.setup()

import networkx as nx

from graphs.services.generators import FamilySpec, GraphFamily, enumerate_connected_labeled, gen_family
from graphs.services.graph_core import Graph


def family(kind: GraphFamily, n: int) -> Graph:
    return gen_family(FamilySpec(kind, n))


def to_networkx(g: Graph) -> nx.Graph:
    """Independent oracle representation of a Graph"""
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result


@pytest.fixture
def p6():
    """The six-vertex path network whose interior forms a comfortable team"""
    return family(GraphFamily.PATH, 6)


@pytest.fixture
def p4():
    return family(GraphFamily.PATH, 4)


@pytest.fixture
def c5():
    """Smallest cycle without a comfortable team"""
    return family(GraphFamily.CYCLE, 5)


@pytest.fixture
def c6():
    return family(GraphFamily.CYCLE, 6)


@pytest.fixture
def k1():
    return family(GraphFamily.COMPLETE, 1)


@pytest.fixture
def k2():
    return family(GraphFamily.COMPLETE, 2)


@pytest.fixture
def k3():
    return family(GraphFamily.COMPLETE, 3)


@pytest.fixture
def star5():
    """K_{1,4} with centre 0"""
    return family(GraphFamily.STAR, 5)


@pytest.fixture
def two_disjoint_edges():
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture(scope='session')
def connected_graphs_up_to_4():
    """All 44 connected labeled graphs on 1..4 vertices"""
    graphs = []
    for n in range(1, 5):
        graphs.extend(enumerate_connected_labeled(n))
    return graphs


@pytest.fixture
def nx_graph():
    """Converter from Graph to networkx.Graph"""
    return to_networkx


@pytest.fixture
def graph_file(tmp_path):
    """Write an edge-list document to a temporary file and return its path"""

    def write(text: str, name: str = 'graph.txt') -> str:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    return write
