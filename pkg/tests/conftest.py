import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from isofactor.enumeration import connected_graphs, trees_up_to
from isofactor.graphs import FamilyParams, build_graph, ordered_edge

# ratio spread: integers, just-above-one, and two coprime mixed cases
PARAM_PAIRS = [(2, 1), (3, 1), (3, 2), (5, 2), (4, 3), (5, 3)]

ALL_PARAMS = [FamilyParams(n, m) for n, m in PARAM_PAIRS]


@pytest.fixture(scope="session")
def small_connected():
    graphs = []
    for size in range(1, 7):
        graphs.extend(connected_graphs(size))
    return tuple(graphs)


@pytest.fixture(scope="session")
def trees_by_size():
    return trees_up_to(10)


@st.composite
def random_graphs(draw, max_vertices=7, connected=True):
    size = draw(st.integers(1, max_vertices))
    edges = set()
    for i in range(1, size):
        edges.add(ordered_edge(draw(st.integers(0, i - 1)), i))
    if not connected and edges:
        keep = draw(st.sets(st.sampled_from(sorted(edges))))
        edges = keep
    pairs = st.tuples(st.integers(0, size - 1), st.integers(0, size - 1))
    for u, v in draw(st.sets(pairs, max_size=2 * size)):
        if u != v:
            edges.add(ordered_edge(u, v))
    return build_graph(size, edges)


@st.composite
def random_trees(draw, max_vertices=9, min_vertices=1):
    size = draw(st.integers(min_vertices, max_vertices))
    edges = [
        ordered_edge(draw(st.integers(0, i - 1)), i) for i in range(1, size)
    ]
    return build_graph(size, edges)


params_strategy = st.sampled_from(ALL_PARAMS)
