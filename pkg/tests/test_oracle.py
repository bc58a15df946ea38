from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import subcubic_graphs
from urmatch.errors import BudgetExhausted
from urmatch.forge import connected_subcubic_graphs, named
from urmatch.matching import is_acyclic_matching, is_uniquely_restricted
from urmatch.oracle import (
    greedy_matching,
    nu_ac_exact,
    nu_exact,
    nu_ur_exact,
    parameters_by_enumeration,
    solve,
)


@pytest.mark.parametrize("name, mode, value", [
    ("K33", "ur", 1), ("C7", "ur", 3), ("P4", "m", 2), ("FIG1", "ur", 3), ("K4", "ur", 1),
    ("C4", "ur", 1), ("K33", "ac", 1), ("K33", "m", 3), ("C7", "ac", 3), ("FIG1", "m", 5),
])
def test_known_values(name, mode, value):
    assert solve(named(name), mode).optimum == value


def test_witnesses_verify():
    g = named("FIG1")
    assert is_uniquely_restricted(g, nu_ur_exact(g).witness)
    assert is_acyclic_matching(g, nu_ac_exact(g).witness)


@settings(max_examples=150, deadline=None)
@given(subcubic_graphs(max_n=9))
def test_oracle_matches_enumeration(g):
    nu, nu_ur, nu_ac = parameters_by_enumeration(g)
    assert nu_exact(g).optimum == nu
    assert nu_ur_exact(g).optimum == nu_ur
    assert nu_ac_exact(g).optimum == nu_ac


def test_parameter_chain_on_small_corpus():
    for n in range(1, 8):
        for g in connected_subcubic_graphs(n):
            ac, ur, nu = nu_ac_exact(g).optimum, nu_ur_exact(g).optimum, nu_exact(g).optimum
            assert ac <= ur <= nu


def test_budget_exhaustion_keeps_incumbent():
    g = named("MCGEE")
    with pytest.raises(BudgetExhausted) as info:
        nu_ur_exact(g, budget=50)
    best = info.value.best
    assert best is not None and not best.optimal
    assert is_uniquely_restricted(g, best.witness)


def test_stop_at_returns_early():
    g = named("MCGEE")
    res = nu_ur_exact(g, stop_at=6)
    assert res.optimum >= 6


def test_greedy_is_valid():
    for name in ("FIG1", "MCGEE", "PETERSEN", "HEAWOOD"):
        g = named(name)
        assert is_uniquely_restricted(g, greedy_matching(g, "ur"))
        assert is_acyclic_matching(g, greedy_matching(g, "ac"))


def test_unknown_mode():
    with pytest.raises(ValueError):
        solve(named("K2"), "xx")
