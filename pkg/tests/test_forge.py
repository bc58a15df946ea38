from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from urmatch.errors import PreconditionError
from urmatch.forge import (
    NAMED_IDS,
    accounting_gap_example,
    claw_chain,
    connected_subcubic_graphs,
    named,
    random_bridged_subcubic,
    random_cubic,
    random_subcubic,
    random_subcubic_girth,
    random_tree,
    subcubic_trees,
    tight_bridge_family,
    tight_family_spec,
    tight_trees,
)
from urmatch.graph import Graph
from urmatch.matching import forest_max_matching
from urmatch.oracle import nu_ur_exact
from urmatch.structure import bridge_report


def test_catalog_basics():
    k33 = named("K33")
    assert (k33.n, k33.m, k33.girth()) == (6, 9, 4)
    assert (named("FIG1").n, named("FIG1").m) == (12, 15)
    mcgee = named("MCGEE")
    assert mcgee.n == 24 and mcgee.is_cubic() and mcgee.girth() == 7
    assert named("HEAWOOD").girth() == 6 and named("HEAWOOD").is_cubic()
    cb = named("CUBIC_BRIDGE")
    assert cb.n == 10 and cb.is_cubic() and bridge_report(cb).b_all == 1
    with pytest.raises(PreconditionError):
        named("NOPE")


def test_catalog_is_stable():
    for name in NAMED_IDS:
        assert named(name) == named(name)
    assert nx.is_isomorphic(to_nx(named("PETERSEN")), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(named("HEAWOOD")), nx.heawood_graph())


def test_fig1_is_the_tight_family_instance():
    assert named("FIG1") == tight_bridge_family(named("K13"), {1, 3})


def test_connected_subcubic_counts():
    counts = [len(connected_subcubic_graphs(n)) for n in range(1, 9)]
    assert counts == [1, 1, 2, 6, 10, 29, 64, 194]


def test_connected_subcubic_graphs_are_distinct():
    graphs = [to_nx(g) for g in connected_subcubic_graphs(7)]
    for a, b in combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b)


def test_subcubic_tree_counts():
    counts = [len(subcubic_trees(n)) for n in range(1, 15)]
    assert counts == [1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66, 135, 265, 552]


def test_tight_trees():
    assert any(nx.is_isomorphic(to_nx(t), nx.star_graph(3)) for t in tight_trees(4))
    # the two-center claw chain has seven vertices and matching number two
    assert len(tight_trees(7)) == 1
    assert tight_trees(7)[0].n == 7
    chain = to_nx(claw_chain(3))
    assert any(nx.is_isomorphic(to_nx(t), chain) for t in tight_trees(10))
    for n in (4, 7, 10, 13, 16, 31):
        for t in tight_trees(n):
            assert 3 * len(forest_max_matching(t)) == n - 1
    with pytest.raises(PreconditionError):
        tight_trees(5)


def test_claw_chain_shape():
    for k in range(1, 8):
        t = claw_chain(k)
        assert t.n == 3 * k + 1 and t.is_tree() and t.is_subcubic()
        assert sorted(t.degrees()).count(3) == k


def test_tight_family_counts():
    t = claw_chain(3)
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    spec = tight_family_spec(t, leaves)
    assert (spec.predicted_m, spec.predicted_b, spec.predicted_nu_ur) == (39, 9, 8)
    assert spec.graph.m == 39
    rep = bridge_report(spec.graph)
    assert rep.b_good == 9 == rep.b_all
    k1 = tight_family_spec(Graph(1), [])
    assert (k1.graph.n, k1.graph.m, k1.predicted_b) == (1, 0, 0)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_tight_family_oracle(k):
    t = claw_chain(3)
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    spec = tight_family_spec(t, leaves[:k])
    rep = bridge_report(spec.graph)
    assert spec.graph.m == spec.predicted_m and rep.b_good == spec.predicted_b
    nu_ur = nu_ur_exact(spec.graph).optimum
    assert nu_ur == spec.predicted_nu_ur
    assert 6 * nu_ur == spec.graph.m + rep.b_good


def test_tight_family_rejects_bad_input():
    with pytest.raises(PreconditionError):
        tight_bridge_family(claw_chain(2), {0})  # a center, not a leaf
    with pytest.raises(PreconditionError):
        tight_bridge_family(named("P4"), {0})  # matching number 2 != 1


def test_random_generators_are_deterministic_and_valid():
    assert random_subcubic(1, 5) == Graph(1)
    g = random_subcubic(20, 7)
    assert g == random_subcubic(20, 7)
    assert g.is_subcubic() and g.is_connected()
    h = random_subcubic_girth(30, 7, 1)
    assert h == random_subcubic_girth(30, 7, 1)
    assert h.is_connected() and (h.girth() is None or h.girth() >= 7)
    cubic = random_cubic(16, 3)
    assert cubic.is_cubic() and cubic == random_cubic(16, 3)
    tree = random_tree(15, 2)
    assert tree.is_tree() and tree.is_subcubic()
    b = random_bridged_subcubic(30, 4)
    assert b.n == 30 and b.is_connected() and b.is_subcubic()
    assert b == random_bridged_subcubic(30, 4)


def test_disconnected_random_subcubic():
    g = random_subcubic(12, 3, connected=False, m=4)
    assert g.m == 4 and g.is_subcubic()


def test_unsatisfiable_girth_request():
    with pytest.raises(PreconditionError):
        random_subcubic_girth(8, 7, 0, m=12, retries=5)


def test_accounting_gap_example_shape():
    g = accounting_gap_example()
    assert (g.n, g.m) == (29, 41) and g.is_connected() and g.is_subcubic()
    rep = bridge_report(g)
    assert rep.b_good == 5
    assert set(rep.good_at(1)) == set(g.adj[1])
    assert not rep.is_good(0, 2) and rep.is_bridge(0, 2)
