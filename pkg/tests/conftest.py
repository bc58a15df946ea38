from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import strategies as st

from urmatch.graph import Graph


@st.composite
def subcubic_graphs(draw, min_n: int = 1, max_n: int = 12, connected: bool = False) -> Graph:
    """Random subcubic graph; with ``connected`` a spanning tree is drawn first."""
    n = draw(st.integers(min_n, max_n))
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    if connected:
        for v in range(1, n):
            options = [u for u in range(v) if deg[u] < 3]
            u = draw(st.sampled_from(options))
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        for u, v in draw(st.lists(st.sampled_from(pairs), max_size=2 * n)):
            if (u, v) not in edges and deg[u] < 3 and deg[v] < 3:
                edges.add((u, v))
                deg[u] += 1
                deg[v] += 1
    return Graph(n, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@pytest.fixture(scope="session")
def atlas_graphs() -> list[Graph]:
    """Every graph on at most 7 vertices (networkx atlas), relabelled densely."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        out.append(Graph(n, [(min(u, v), max(u, v)) for u, v in h.edges()]))
    return out
