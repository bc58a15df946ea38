"""Exact desk-scale computation of the matching parameters.

``nu_ur_exact`` and ``nu_ac_exact`` run a branch-and-bound over the edges;
``nu_exact`` is a plain maximum matching.  All three return an
:class:`OracleResult` whose witness re-verifies under :mod:`urmatch.matching`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .blossom import maximum_matching
from .errors import BudgetExhausted
from .graph import Edge, Graph
from .matching import (
    Matching,
    closes_alternating_cycle,
    enumerate_matchings,
    induces_forest,
    is_acyclic_matching,
    is_uniquely_restricted,
)

DEFAULT_BUDGET = 10**7
MODES = ("ur", "m", "ac")


@dataclass(frozen=True)
class OracleResult:
    mode: str
    optimum: int
    witness: Matching
    explored: int
    optimal: bool = True


def _matching_number(edges: list[Edge]) -> int:
    index: dict[int, int] = {}
    for u, v in edges:
        index.setdefault(u, len(index))
        index.setdefault(v, len(index))
    adj: list[list[int]] = [[] for _ in index]
    for u, v in edges:
        a, b = index[u], index[v]
        adj[a].append(b)
        adj[b].append(a)
    mate = maximum_matching(adj)
    return sum(1 for i, j in enumerate(mate) if j > i)


def nu_exact(g: Graph) -> OracleResult:
    mate = maximum_matching(g.adj)
    w = Matching(g, [(v, mate[v]) for v in range(g.n) if mate[v] > v])
    return OracleResult("m", len(w), w, 0)


Blocker = Callable[[Graph, list[int], set[int], int, int], bool]


def _ur_blocked(g: Graph, mate: list[int], covered: set[int], u: int, v: int) -> bool:
    return closes_alternating_cycle(g, mate, covered, u, v)


def _ac_blocked(g: Graph, mate: list[int], covered: set[int], u: int, v: int) -> bool:
    return not induces_forest(g, covered | {u, v})


class _Stop(Exception):
    pass


def branch_order(g: Graph) -> list[Edge]:
    deg = g.degrees()
    return sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))


def greedy_matching(g: Graph, mode: str = "ur", order: Iterable[Edge] | None = None) -> Matching:
    """Maximal matching keeping the ``ur`` or ``ac`` property, scanning ``order``."""
    blocked = _ur_blocked if mode == "ur" else _ac_blocked
    mate = [-1] * g.n
    covered: set[int] = set()
    chosen = []
    for u, v in (branch_order(g) if order is None else order):
        if mate[u] == -1 and mate[v] == -1 and not blocked(g, mate, covered, u, v):
            mate[u], mate[v] = v, u
            covered.update((u, v))
            chosen.append((u, v))
    return Matching(g, chosen)


def _branch_and_bound(g: Graph, mode: str, blocked: Blocker, budget: int,
                      incumbent: Matching | None, stop_at: int | None) -> OracleResult:
    order = branch_order(g)
    mate = [-1] * g.n
    covered: set[int] = set()
    chosen: list[Edge] = []
    best = list(incumbent.edges) if incumbent is not None else []
    explored = 0

    def rec(i: int) -> None:
        nonlocal best, explored
        explored += 1
        if explored > budget:
            raise BudgetExhausted("node budget exhausted", explored=explored)
        if len(chosen) > len(best):
            best = list(chosen)
            if stop_at is not None and len(best) >= stop_at:
                raise _Stop
        residual = [e for e in order[i:] if mate[e[0]] == -1 and mate[e[1]] == -1]
        if not residual:
            return
        free = {x for e in residual for x in e}
        if len(chosen) + len(free) // 2 <= len(best):
            return
        if len(chosen) + _matching_number(residual) <= len(best):
            return
        u, v = residual[0]
        j = order.index(residual[0], i) + 1
        if not blocked(g, mate, covered, u, v):
            mate[u], mate[v] = v, u
            covered.update((u, v))
            chosen.append((u, v))
            rec(j)
            chosen.pop()
            covered.difference_update((u, v))
            mate[u] = mate[v] = -1
        rec(j)

    optimal = True
    try:
        rec(0)
    except _Stop:
        optimal = False
    except BudgetExhausted as exc:
        partial = OracleResult(mode, len(best), Matching(g, best), explored, optimal=False)
        raise BudgetExhausted(
            f"{mode} search exhausted its budget of {budget} nodes "
            f"(best found {len(best)}, not proven optimal)",
            best=partial, explored=explored) from exc
    result = OracleResult(mode, len(best), Matching(g, best), explored, optimal)
    check = is_uniquely_restricted if mode == "ur" else is_acyclic_matching
    if not check(g, result.witness):
        raise AssertionError(f"oracle witness fails the {mode} property")
    return result


def nu_ur_exact(g: Graph, budget: int = DEFAULT_BUDGET, *,
                incumbent: Matching | None = None,
                stop_at: int | None = None) -> OracleResult:
    """Maximum uniquely restricted matching by branch-and-bound.

    Edges are branched in order of decreasing endpoint-degree sum, include
    branch first.  Nodes are pruned with ``|M| + nu(residual)``, which is
    admissible because every uniquely restricted matching is a matching.
    ``stop_at`` ends the search as soon as a matching of that size is found
    (the result is then flagged ``optimal=False``).
    """
    if incumbent is None:
        incumbent = greedy_matching(g, "ur")
    return _branch_and_bound(g, "ur", _ur_blocked, budget, incumbent, stop_at)


def nu_ac_exact(g: Graph, budget: int = DEFAULT_BUDGET, *,
                incumbent: Matching | None = None,
                stop_at: int | None = None) -> OracleResult:
    if incumbent is None:
        incumbent = greedy_matching(g, "ac")
    return _branch_and_bound(g, "ac", _ac_blocked, budget, incumbent, stop_at)


def solve(g: Graph, mode: str, budget: int = DEFAULT_BUDGET) -> OracleResult:
    if mode == "ur":
        return nu_ur_exact(g, budget)
    if mode == "ac":
        return nu_ac_exact(g, budget)
    if mode == "m":
        return nu_exact(g)
    raise ValueError(f"unknown parameter {mode!r}; expected one of {MODES}")


def parameters_by_enumeration(g: Graph) -> tuple[int, int, int]:
    """``(nu, nu_ur, nu_ac)`` straight from the definitions; tiny graphs only."""
    matchings = list(enumerate_matchings(g))
    by_cover: dict[frozenset[int], int] = {}
    for mt in matchings:
        key = frozenset(x for e in mt for x in e)
        by_cover[key] = by_cover.get(key, 0) + 1
    nu = max(len(mt) for mt in matchings)
    nu_ur = max(len(mt) for mt in matchings
                if by_cover[frozenset(x for e in mt for x in e)] == 1)
    nu_ac = max(len(mt) for mt in matchings
                if induces_forest(g, {x for e in mt for x in e}))
    return nu, nu_ur, nu_ac
