"""Structural predicates consumed by the certifiers.

* bridges and *good* bridges: a bridge is good when both sides of it
  contain a vertex whose degree in the whole graph is at most two;
* maximal paths whose every other vertex has degree two;
* an endvertex of a depth-first spanning tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Edge, Graph, norm_edge


def find_bridges(g: Graph) -> list[Edge]:
    """All bridges, by iterative depth-first low-link."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    out: list[Edge] = []
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            x, parent, it = stack[-1]
            y = next(it, None)
            if y is None:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        out.append(norm_edge(parent, x))
                continue
            if y == parent:
                continue
            if disc[y] >= 0:
                low[x] = min(low[x], disc[y])
            else:
                disc[y] = low[y] = timer
                timer += 1
                stack.append((y, x, iter(sorted(g.adj[y]))))
    return sorted(out)


def side_of(g: Graph, edge: Edge, start: int) -> frozenset[int]:
    """Vertices reachable from ``start`` in ``g`` minus ``edge``."""
    a, b = edge
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if (x == a and y == b) or (x == b and y == a):
                continue
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@dataclass(frozen=True)
class BridgeReport:
    """Bridges of a graph and which of them are good.

    ``side_low[e] == (flag_u, flag_v)`` tells, for bridge ``e = (u, v)``,
    whether the side containing ``u`` (resp. ``v``) holds a vertex of
    degree at most two in the host graph.
    """

    graph: Graph
    bridges: frozenset[Edge]
    good_bridges: frozenset[Edge]
    side_low: dict[Edge, tuple[bool, bool]] = field(repr=False)

    @property
    def b_good(self) -> int:
        return len(self.good_bridges)

    @property
    def b_all(self) -> int:
        return len(self.bridges)

    def is_bridge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.bridges

    def is_good(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.good_bridges

    def good_at(self, v: int) -> list[int]:
        """Neighbours ``x`` of ``v`` with ``vx`` a good bridge, ascending."""
        return sorted(x for x in self.graph.adj[v] if norm_edge(v, x) in self.good_bridges)

    def sides(self, edge: Edge) -> tuple[frozenset[int], frozenset[int]]:
        """The two vertex sets left after deleting the bridge ``edge``."""
        e = norm_edge(*edge)
        if e not in self.bridges:
            raise PreconditionError(f"{e} is not a bridge")
        return side_of(self.graph, e, e[0]), side_of(self.graph, e, e[1])


def bridge_report(g: Graph) -> BridgeReport:
    """Classify every edge as non-bridge, bridge, or good bridge.

    Degrees are always measured in ``g``.  The side flags come from a
    subtree count over the bridge tree of each component, so the whole
    classification is linear.
    """
    bridges = find_bridges(g)
    bset = set(bridges)
    low_deg = [len(a) <= 2 for a in g.adj]

    # 2-edge-connected blocks: components after deleting all bridges
    block = [-1] * g.n
    nblocks = 0
    for s in range(g.n):
        if block[s] >= 0:
            continue
        block[s] = nblocks
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if block[y] < 0 and norm_edge(x, y) not in bset:
                    block[y] = nblocks
                    queue.append(y)
        nblocks += 1
    weight = [0] * nblocks
    for v in range(g.n):
        if low_deg[v]:
            weight[block[v]] += 1
    tree: list[list[tuple[int, Edge]]] = [[] for _ in range(nblocks)]
    for e in bridges:
        bu, bv = block[e[0]], block[e[1]]
        tree[bu].append((bv, e))
        tree[bv].append((bu, e))

    # subtree sums of low-degree counts, rooted anywhere in each tree component
    subtotal = weight[:]
    parent_edge: list[Edge | None] = [None] * nblocks
    tree_root = [-1] * nblocks
    order = []
    for r in range(nblocks):
        if tree_root[r] >= 0:
            continue
        tree_root[r] = r
        stack = [r]
        while stack:
            x = stack.pop()
            order.append(x)
            for y, e in tree[x]:
                if tree_root[y] < 0:
                    tree_root[y] = r
                    parent_edge[y] = e
                    stack.append(y)
    total: dict[int, int] = {}
    for x in reversed(order):
        e = parent_edge[x]
        if e is not None:
            other = block[e[0]] if block[e[0]] != x else block[e[1]]
            subtotal[other] += subtotal[x]
    for x in order:
        if tree_root[x] == x:
            total[x] = subtotal[x]

    side_low: dict[Edge, tuple[bool, bool]] = {}
    good = set()
    for x in range(nblocks):
        e = parent_edge[x]
        if e is None:
            continue
        inside = subtotal[x]
        outside = total[tree_root[x]] - inside
        u_in = block[e[0]] == x
        flags = (inside > 0, outside > 0) if u_in else (outside > 0, inside > 0)
        side_low[e] = flags
        if flags[0] and flags[1]:
            good.add(e)
    return BridgeReport(g, frozenset(bset), frozenset(good), side_low)


def bridge_report_bruteforce(g: Graph) -> tuple[set[Edge], set[Edge]]:
    """Delete-and-scan reference: ``(bridges, good_bridges)``."""
    base = len(g.components())
    deg = g.degrees()
    bridges, good = set(), set()
    for e in g.sorted_edges():
        if len(g.remove_edge(*e).components()) == base + 1:
            bridges.add(e)
            a = side_of(g, e, e[0])
            b = side_of(g, e, e[1])
            if any(deg[x] <= 2 for x in a) and any(deg[x] <= 2 for x in b):
                good.add(e)
    return bridges, good


# -- alternating degree-2 paths ---------------------------------------------

@dataclass(frozen=True)
class AlternatingPath:
    """Path ``u_1 v_1 u_2 ... v_k u_{k+1}`` where every ``v_i`` has degree 2."""

    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return (len(self.vertices) - 1) // 2

    @property
    def us(self) -> tuple[int, ...]:
        return self.vertices[0::2]

    @property
    def vs(self) -> tuple[int, ...]:
        return self.vertices[1::2]

    def matching_edges(self) -> list[Edge]:
        """The edges ``u_i v_i`` for i = 1..k."""
        p = self.vertices
        return [norm_edge(p[2 * i], p[2 * i + 1]) for i in range(self.k)]


def _extension(g: Graph, end: int, on_path: set[int]) -> tuple[int, int] | None:
    for x in sorted(g.adj[end]):
        if x in on_path or len(g.adj[x]) != 2:
            continue
        (z,) = [y for y in g.adj[x] if y != end]
        if z not in on_path:
            return x, z
    return None


def path_extension(g: Graph, path: AlternatingPath) -> tuple[int, int, int] | None:
    """A two-vertex extension ``(end, x, z)`` of ``path`` if one exists."""
    on_path = set(path.vertices)
    for end in (path.vertices[0], path.vertices[-1]):
        ext = _extension(g, end, on_path)
        if ext is not None:
            return (end, *ext)
    return None


def maximal_degree2_path(g: Graph, seed: int) -> AlternatingPath:
    """Grow a maximal alternating path around the degree-2 vertex ``seed``.

    The front end is extended first, then the back end; at each end the
    smallest-id admissible neighbour is taken.
    """
    if g.degree(seed) != 2:
        raise PreconditionError(f"seed {seed} has degree {g.degree(seed)}, expected 2")
    a, b = sorted(g.adj[seed])
    path = deque([a, seed, b])
    on_path = {a, seed, b}
    for front in (True, False):
        while True:
            end = path[0] if front else path[-1]
            ext = _extension(g, end, on_path)
            if ext is None:
                break
            x, z = ext
            on_path.update((x, z))
            if front:
                path.appendleft(x)
                path.appendleft(z)
            else:
                path.append(x)
                path.append(z)
    result = AlternatingPath(tuple(path))
    # extending the back end cannot reopen the front, but re-check anyway
    assert path_extension(g, result) is None
    return result


def spanning_tree_endvertex(g: Graph) -> int:
    """Smallest-id leaf of the depth-first spanning tree rooted at 0."""
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    if not g.is_connected():
        raise PreconditionError("graph is disconnected")
    tree_deg = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    stack = [(0, iter(sorted(g.adj[0])))]
    while stack:
        x, it = stack[-1]
        y = next(it, None)
        if y is None:
            stack.pop()
            continue
        if not seen[y]:
            seen[y] = True
            tree_deg[x] += 1
            tree_deg[y] += 1
            stack.append((y, iter(sorted(g.adj[y]))))
    return min(v for v in range(g.n) if tree_deg[v] == 1)
