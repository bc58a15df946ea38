from __future__ import annotations

import pytest
from hypothesis import given

from conftest import subcubic_graphs
from urmatch.errors import GraphFormatError, PreconditionError
from urmatch.forge import named
from urmatch.graph import (
    Graph,
    format_edge_list,
    is_isomorphic_bruteforce,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)

K33_EDGES = [(a, b) for a in range(3) for b in range(3, 6)]


def test_from_edge_list_examples():
    assert Graph.from_edge_list(2, [(0, 1)]).m == 1
    k33 = Graph.from_edge_list(6, K33_EDGES)
    assert k33.m == 9
    with pytest.raises(GraphFormatError) as info:
        Graph.from_edge_list(3, [(0, 1), (0, 1)])
    assert info.value.item == (0, 1)


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_from_edge_list_rejects(pairs):
    with pytest.raises(GraphFormatError):
        Graph.from_edge_list(3, pairs)


def test_degrees():
    assert all(named("K33").degree(v) == 3 for v in range(6))
    assert named("K2").degree(0) == 1
    assert all(named("C7").degree(v) == 2 for v in range(7))
    with pytest.raises(PreconditionError):
        named("K2").degree(5)


def test_subcubic_and_cubic():
    k33, p4 = named("K33"), named("P4")
    assert k33.is_subcubic() and k33.is_cubic()
    assert p4.is_subcubic() and not p4.is_cubic()
    k5 = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert not k5.is_subcubic()


def test_components():
    assert len(Graph(4, [(0, 1), (2, 3)]).components()) == 2
    assert len(named("C7").components()) == 1
    assert Graph(3).components() == [[0], [1], [2]]


def test_girth():
    assert named("K33").girth() == 4
    assert named("P4").girth() is None
    assert named("MCGEE").girth() == 7
    assert named("HEAWOOD").girth() == 6
    assert named("PETERSEN").girth() == 5
    assert named("K4").girth() == 3


def test_induced_delete():
    h, old = named("C7").induced_delete({0})
    assert h.n == 6 and h.m == 5 and h.is_tree() and h.max_degree() == 2
    assert old == [1, 2, 3, 4, 5, 6]
    empty, old = named("K2").induced_delete({0, 1})
    assert empty.n == 0 and old == []
    fig1 = named("FIG1")
    h, _ = fig1.induced_delete({0, 2})  # thick pendant edge A-C
    assert h.m == fig1.m - 3


def test_add_edge():
    c3 = named("P3").add_edge(0, 2)
    assert c3.m == 3 and c3.girth() == 3
    with pytest.raises(PreconditionError):
        named("K2").add_edge(0, 1)
    with pytest.raises(PreconditionError):
        named("K2").add_edge(1, 1)
    p = named("P4").add_edge(0, 3)
    assert p.girth() == 4


def test_k33_k23_recognition(atlas_graphs):
    k33, k23 = Graph(6, K33_EDGES), named("K23")
    c6 = Graph(6, [(i, (i + 1) % 6) if i < 5 else (0, 5) for i in range(6)])
    assert (k33.is_k33(), k33.is_k23()) == (True, False)
    assert (c6.is_k33(), c6.is_k23()) == (False, False)
    assert (k23.is_k33(), k23.is_k23()) == (False, True)
    for g in atlas_graphs:
        if g.n <= 6:
            assert g.is_k33() == (g.n == 6 and is_isomorphic_bruteforce(g, k33))
            assert g.is_k23() == (g.n == 5 and is_isomorphic_bruteforce(g, k23))


@given(subcubic_graphs())
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.m


@given(subcubic_graphs(min_n=2, connected=True))
def test_deletion_lowers_a_degree_in_every_new_component(g):
    h, old = g.induced_delete({0})
    for comp in h.components():
        assert any(h.degree(x) < g.degree(old[x]) for x in comp)


@given(subcubic_graphs(max_n=14))
def test_girth_seven_structure(g):
    if g.girth() is None or g.girth() < 7:
        return
    for u, v in g.edges:
        assert not (g.adj[u] & g.adj[v])
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert len(g.adj[u] & g.adj[v]) <= 1


def test_edge_list_format_is_exact():
    g = Graph(4, [(2, 3), (0, 1), (1, 2)])
    assert format_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n"
    assert parse_edge_list("3 2\n2 1\n0 1\n") == Graph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("text, line", [
    ("3 2\n0 1\n0 1\n", 3),
    ("3 2\n0 1\n1 1\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 2\n0 1\n", None),
    ("3\n", 1),
    ("3 1\n0 x\n", 2),
])
def test_edge_list_errors(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    if line is not None:
        assert info.value.line == line


@given(subcubic_graphs())
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_file_roundtrip(tmp_path):
    g = named("FIG1")
    path = tmp_path / "fig1.txt"
    write_edge_list(g, path)
    assert path.read_bytes() == format_edge_list(g).encode()
    assert read_edge_list(path) == g
