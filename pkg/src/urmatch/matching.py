"""Matchings, the uniquely-restricted and acyclic verifiers, forest matchings.

A matching ``M`` is uniquely restricted when no other matching covers the
same vertex set, which happens exactly when ``G`` has no ``M``-alternating
cycle.  It is acyclic when the covered vertices induce a forest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .blossom import augmenting_path, maximum_matching
from .errors import GraphFormatError, PreconditionError
from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class Matching:
    host: Graph
    edges: frozenset[Edge]

    def __init__(self, host: Graph, edges: Iterable[Edge] = ()):
        es = frozenset(norm_edge(u, v) for u, v in edges)
        seen: set[int] = set()
        for e in sorted(es):
            if e not in host.edges:
                raise PreconditionError(f"{e} is not an edge of the host graph")
            if e[0] in seen or e[1] in seen:
                raise PreconditionError(f"{e} shares a vertex with another matching edge")
            seen.update(e)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "edges", es)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def mate(self) -> list[int]:
        mate = [-1] * self.host.n
        for u, v in self.edges:
            mate[u], mate[v] = v, u
        return mate

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def __repr__(self) -> str:
        return f"Matching({self.sorted_edges()})"


@dataclass(frozen=True)
class AlternatingCycleWitness:
    """Cyclic vertex sequence; edge ``(c[0], c[1])`` is matched, then they alternate."""

    cycle: tuple[int, ...]

    def edges(self) -> list[Edge]:
        c = self.cycle
        return [norm_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]

    def is_valid(self, m: Matching) -> bool:
        c = self.cycle
        if len(c) < 4 or len(c) % 2 or len(set(c)) != len(c):
            return False
        for i, e in enumerate(self.edges()):
            if e not in m.host.edges or (e in m.edges) != (i % 2 == 0):
                return False
        return True


@dataclass(frozen=True)
class URVerdict:
    uniquely_restricted: bool
    witness: AlternatingCycleWitness | None = None

    def __bool__(self) -> bool:
        return self.uniquely_restricted


def as_matching(g: Graph, m) -> Matching:
    return m if isinstance(m, Matching) else Matching(g, m)


def _state_graph_cycle(g: Graph, m: Matching, mate: list[int]) -> list[int] | None:
    """Directed-cycle search over oriented matched edges.

    State ``(u, v)`` means "enter the matched edge at ``u``, leave at ``v``";
    it has an arc to ``(x, mate[x])`` for every non-matching edge ``vx``
    with ``x`` covered.  Returns the entry vertices of a cycle or ``None``.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    color: dict[int, int] = {}
    for start in sorted(m.covered):
        if color.get(start, WHITE) != WHITE:
            continue
        # a state is identified by its entry vertex
        color[start] = GREY
        stack = [(start, iter(sorted(g.adj[mate[start]])))]
        while stack:
            entry, it = stack[-1]
            nxt = None
            for x in it:
                if x != entry and mate[x] != -1:
                    nxt = x
                    break
            if nxt is None:
                color[entry] = BLACK
                stack.pop()
                continue
            c = color.get(nxt, WHITE)
            if c == GREY:
                entries = [s for s, _ in stack]
                return entries[entries.index(nxt):]
            if c == WHITE:
                color[nxt] = GREY
                stack.append((nxt, iter(sorted(g.adj[mate[nxt]]))))
    return None


def _exact_alternating_cycle(g: Graph, m: Matching, mate: list[int]) -> list[int] | None:
    covered = m.covered
    for u, v in m.sorted_edges():
        mate[u] = mate[v] = -1
        path = augmenting_path(g.adj, mate, u, allowed=covered, skip_edge=(u, v))
        mate[u], mate[v] = v, u
        if path is not None:
            # path runs v ... u; prepend the matched edge (v, u)
            if path[0] != v or path[-1] != u:
                raise AssertionError("augmenting path with unexpected endpoints")
            return [v] + path[::-1][:-1]
    return None


def is_uniquely_restricted(g: Graph, m) -> URVerdict:
    """Decide the uniquely-restricted property; return a witness cycle if it fails.

    A directed cycle search over oriented matched edges settles the
    acyclic case and usually produces a witness directly.  A closed walk
    found there may traverse one matched edge in both directions (two odd
    cycles hanging off the same edge), which is not an alternating cycle;
    in that case an exact augmenting-path check decides.
    """
    m = as_matching(g, m)
    if len(m) < 2:
        return URVerdict(True)
    mate = m.mate()
    entries = _state_graph_cycle(g, m, mate)
    if entries is None:
        return URVerdict(True)
    used = set()
    simple = True
    for x in entries:
        e = norm_edge(x, mate[x])
        if e in used:
            simple = False
            break
        used.add(e)
    if simple:
        cyc = []
        for x in entries:
            cyc.extend((x, mate[x]))
        witness = AlternatingCycleWitness(tuple(cyc))
    else:
        found = _exact_alternating_cycle(g, m, mate)
        if found is None:
            return URVerdict(True)
        witness = AlternatingCycleWitness(tuple(found))
    if not witness.is_valid(m):
        raise AssertionError(f"internal error: invalid witness {witness.cycle}")
    return URVerdict(False, witness)


def closes_alternating_cycle(g: Graph, mate: list[int], covered: set[int], u: int, v: int) -> bool:
    """Would adding the edge ``uv`` to a uniquely restricted matching create an alternating cycle?

    ``u`` and ``v`` must be exposed.  The new cycle has to use ``uv``, so this
    is an augmenting-path query between ``u`` and ``v`` inside the covered
    vertices plus ``{u, v}`` with the edge ``uv`` hidden.
    """
    if not covered:
        return False
    allowed = set(covered)
    allowed.add(u)
    allowed.add(v)
    path = augmenting_path(g.adj, mate, u, allowed=allowed, skip_edge=(u, v))
    return path is not None


def perfect_matchings(g: Graph, vertices: Iterable[int]) -> Iterator[frozenset[Edge]]:
    """All perfect matchings of the subgraph induced by ``vertices``."""
    verts = sorted(set(vertices))
    vs = set(verts)

    def rec(rest: list[int]) -> Iterator[list[Edge]]:
        if not rest:
            yield []
            return
        x = rest[0]
        others = rest[1:]
        oset = set(others)
        for y in sorted(g.adj[x]):
            if y in oset and y in vs:
                remaining = [z for z in others if z != y]
                for tail in rec(remaining):
                    yield [norm_edge(x, y)] + tail
    for pm in rec(verts):
        yield frozenset(pm)


def is_uniquely_restricted_by_definition(g: Graph, m) -> bool:
    """Slow path: look for a second matching covering exactly ``V(M)``.

    Any such matching lives inside the subgraph induced by ``V(M)``, so it
    is enough to enumerate that subgraph's perfect matchings.
    """
    m = as_matching(g, m)
    count = 0
    for _ in perfect_matchings(g, m.covered):
        count += 1
        if count > 1:
            return False
    return True


def enumerate_matchings(g: Graph) -> Iterator[frozenset[Edge]]:
    """Every matching of ``g`` (including the empty one)."""
    edges = g.sorted_edges()

    def rec(i: int, used: set[int], chosen: list[Edge]) -> Iterator[frozenset[Edge]]:
        if i == len(edges):
            yield frozenset(chosen)
            return
        yield from rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            chosen.append(edges[i])
            yield from rec(i + 1, used, chosen)
            chosen.pop()
            used.discard(u)
            used.discard(v)
    yield from rec(0, set(), [])


def induces_forest(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    parent = {v: v for v in vs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for u, v in g.edges:
        if u in vs and v in vs:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def is_acyclic_matching(g: Graph, m) -> bool:
    m = as_matching(g, m)
    return induces_forest(g, m.covered)


def forest_max_matching(f: Graph) -> Matching:
    """Maximum matching of a forest by leaf-first greedy matching.

    Matching a leaf to its parent whenever both are free is optimal on
    trees (exchange argument); the result is uniquely restricted since a
    forest has no cycles at all.
    """
    if not f.is_forest():
        raise PreconditionError("input graph has a cycle")
    parent = [-1] * f.n
    order = []
    seen = [False] * f.n
    for root in range(f.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(f.adj[x]):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    queue.append(y)
    matched = [False] * f.n
    edges = []
    for x in reversed(order):
        p = parent[x]
        if p >= 0 and not matched[x] and not matched[p]:
            matched[x] = matched[p] = True
            edges.append((x, p))
    return Matching(f, edges)


def maximum_matching_size(g: Graph) -> int:
    mate = maximum_matching(g.adj)
    return sum(1 for v in range(g.n) if mate[v] > v)


# -- matching text format ------------------------------------------------------

def format_matching(m) -> str:
    edges = m.sorted_edges() if isinstance(m, Matching) else sorted(norm_edge(*e) for e in m)
    return "".join(f"{u} {v}\n" for u, v in edges)


def parse_matching(text: str, host: Graph | None = None):
    """Parse the one-edge-per-line format; returns a :class:`Matching` if ``host`` is given."""
    edges = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, start=1):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", item=(u, v), line=lineno)
        if host is not None and not host.has_edge(u, v):
            raise GraphFormatError(f"({u}, {v}) is not an edge of the graph", item=(u, v), line=lineno)
        edges.append(norm_edge(u, v))
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate matching edge")
    if host is None:
        return edges
    try:
        return Matching(host, edges)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc)) from None


def read_matching(path: str | Path, host: Graph | None = None):
    return parse_matching(Path(path).read_text(), host)


def write_matching(m, path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_matching(m))
