"""Instance generators: named graphs, tight families, random and exhaustive corpora.

Every generator is a deterministic function of its arguments (including the
seed).  Claims a generator makes about its output, such as the matching
number of a tight tree, are re-checked before the graph is returned.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import PreconditionError
from .graph import Edge, Graph, norm_edge
from .matching import forest_max_matching

# -- named catalog -------------------------------------------------------------


def _lcf(n: int, shifts: list[int]) -> list[Edge]:
    edges = {norm_edge(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        edges.add(norm_edge(i, (i + shifts[i % len(shifts)]) % n))
    return sorted(edges)


def _cycle(n: int) -> list[Edge]:
    return [norm_edge(i, (i + 1) % n) for i in range(n)]


def _path(n: int) -> list[Edge]:
    return [(i, i + 1) for i in range(n - 1)]


def _complete_bipartite(a: int, b: int) -> list[Edge]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def _cubic_bridge() -> list[Edge]:
    # K4 on 0..3 with the edge 01 subdivided by 4; a second copy on 5..9;
    # the two subdivision vertices are joined by the bridge 4-9
    block = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    return block + [(u + 5, v + 5) for u, v in block] + [(4, 9)]


FIG1_EDGES = [
    (0, 1), (0, 2), (0, 3),
    (1, 6), (1, 7), (4, 6), (4, 7), (5, 6), (5, 7),
    (3, 10), (3, 11), (8, 10), (8, 11), (9, 10), (9, 11),
]

_CATALOG = {
    "K1": lambda: (1, []),
    "K2": lambda: (2, [(0, 1)]),
    "P3": lambda: (3, _path(3)),
    "P4": lambda: (4, _path(4)),
    "C4": lambda: (4, _cycle(4)),
    "C7": lambda: (7, _cycle(7)),
    "K4": lambda: (4, [(i, j) for i in range(4) for j in range(i + 1, 4)]),
    "K13": lambda: (4, [(0, 1), (0, 2), (0, 3)]),
    "K23": lambda: (5, _complete_bipartite(2, 3)),
    "K33": lambda: (6, _complete_bipartite(3, 3)),
    "FIG1": lambda: (12, FIG1_EDGES),
    "MCGEE": lambda: (24, _lcf(24, [12, 7, -7])),
    "HEAWOOD": lambda: (14, _lcf(14, [5, -5])),
    "PETERSEN": lambda: (10, _cycle(5) + [(i, i + 5) for i in range(5)]
                         + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]),
    "CUBIC_BRIDGE": lambda: (10, _cubic_bridge()),
}

NAMED_IDS = tuple(_CATALOG)


def named(name: str) -> Graph:
    """Fixed catalog graph by id (``K33``, ``FIG1``, ``MCGEE``...)."""
    key = name.upper().replace("-", "_")
    if key not in _CATALOG:
        raise PreconditionError(f"unknown catalog id {name!r}; known: {', '.join(NAMED_IDS)}")
    n, edges = _CATALOG[key]()
    return Graph(n, edges)


# -- tight trees and the K_{2,3} family --------------------------------------------


def claw_chain(k: int) -> Graph:
    """Tree with ``k`` degree-3 centers linked through degree-2 middle vertices.

    Order ``3k + 1``; every edge meets a center, so the matching number is ``k``.
    """
    if k < 1:
        raise PreconditionError("claw chain needs at least one center")
    if k == 1:
        return Graph(4, [(0, 1), (0, 2), (0, 3)])
    edges = [(0, 1), (0, 2)]
    center, nxt = 0, 3
    for i in range(2, k + 1):
        mid, new_center = nxt, nxt + 1
        edges += [(center, mid), (mid, new_center)]
        nxt += 2
        for _ in range(2 if i == k else 1):
            edges.append((new_center, nxt))
            nxt += 1
        center = new_center
    g = Graph(nxt, edges)
    assert g.n == 3 * k + 1 and g.is_tree()
    return g


def _is_tight_tree(t: Graph) -> bool:
    return t.is_tree() and t.is_subcubic() and 3 * len(forest_max_matching(t)) == t.n - 1


def tight_trees(n: int) -> list[Graph]:
    """Subcubic trees of order ``n`` with matching number ``(n - 1) / 3``.

    Exhaustive for ``n <= 13``; beyond that only the claw chain is returned.
    """
    if n < 1 or n % 3 != 1:
        raise PreconditionError(f"tight trees need n = 1 mod 3, got {n}")
    if n <= 13:
        out = [t for t in subcubic_trees(n) if _is_tight_tree(t)]
    else:
        out = [claw_chain((n - 1) // 3)]
    for t in out:
        if not _is_tight_tree(t):
            raise AssertionError("generated tree is not tight")
    return out


@dataclass(frozen=True)
class TightFamilySpec:
    scaffold: Graph
    replaced: tuple[int, ...]
    graph: Graph
    predicted_m: int
    predicted_b: int
    predicted_nu_ur: int

    @property
    def k(self) -> int:
        return len(self.replaced)


def tight_bridge_family(t: Graph, replaced) -> Graph:
    """Replace the leaves ``replaced`` of a tight tree by ``K_{2,3}`` endblocks.

    Each leaf ``s`` becomes a vertex of the 3-side of a new ``K_{2,3}``:
    four new vertices ``r, r', p, q`` are added (in that order) with
    ``p, q`` adjacent to ``s, r, r'``.
    """
    return tight_family_spec(t, replaced).graph


def tight_family_spec(t: Graph, replaced) -> TightFamilySpec:
    leaves = sorted(set(replaced))
    if not (t.is_tree() and t.is_subcubic()):
        raise PreconditionError("scaffold must be a subcubic tree")
    if 3 * len(forest_max_matching(t)) != t.n - 1:
        raise PreconditionError("scaffold matching number differs from (n-1)/3")
    for s in leaves:
        if not 0 <= s < t.n or t.degree(s) != 1:
            raise PreconditionError(f"vertex {s} is not a leaf of the scaffold")
    edges = list(t.edges)
    nxt = t.n
    for s in leaves:
        r, r2, p, q = nxt, nxt + 1, nxt + 2, nxt + 3
        nxt += 4
        for hub in (p, q):
            edges += [(hub, s), (hub, r), (hub, r2)]
    g = Graph(nxt, edges)
    nt, k = t.n, len(leaves)
    return TightFamilySpec(t, tuple(leaves), g, nt - 1 + 6 * k, nt - 1, (nt - 1) // 3 + k)


# -- exhaustive small corpora ---------------------------------------------------------


def _rooted_code(adj: list[list[int]], root: int, parent: int) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _tree_canon(adj: list[list[int]]) -> str:
    return min(_rooted_code(adj, c, -1) for c in _centers(adj))


def _tree_from_code(code: str) -> Graph:
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return Graph(nxt, edges)


@lru_cache(maxsize=None)
def _subcubic_tree_codes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("()",)
    out = set()
    for code in _subcubic_tree_codes(n - 1):
        t = _tree_from_code(code)
        adj = [sorted(a) for a in t.adj]
        for v in range(t.n):
            if len(adj[v]) < 3:
                adj2 = [list(a) for a in adj] + [[v]]
                adj2[v].append(t.n)
                out.add(_tree_canon(adj2))
    return tuple(sorted(out))


def subcubic_trees(n: int) -> list[Graph]:
    """All subcubic trees on ``n`` vertices up to isomorphism."""
    if n < 1:
        return []
    return [_tree_from_code(c) for c in _subcubic_tree_codes(n)]


@lru_cache(maxsize=None)
def _connected_subcubic(n: int) -> tuple[Graph, ...]:
    import networkx as nx

    if n == 1:
        return (Graph(1),)
    buckets: dict[str, list] = {}
    out: list[Graph] = []
    for parent in _connected_subcubic(n - 1):
        free = [v for v in range(parent.n) if parent.degree(v) < 3]
        for r in (1, 2, 3):
            for nbrs in combinations(free, r):
                g = Graph(n, list(parent.edges) + [(v, n - 1) for v in nbrs])
                h = nx.Graph()
                h.add_nodes_from(range(n))
                h.add_edges_from(g.edges)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(g)
    return tuple(out)


def connected_subcubic_graphs(n: int) -> list[Graph]:
    """All connected subcubic graphs on ``n`` vertices up to isomorphism.

    Built by vertex addition: removing a leaf of a spanning tree keeps a
    connected subcubic graph, so every isomorphism class is reached.
    """
    if n < 1:
        return []
    return list(_connected_subcubic(n))


# -- random instances -----------------------------------------------------------------


def _rng(tag: str, *args) -> random.Random:
    return random.Random(":".join([tag, *map(str, args)]))


def _random_tree_edges(rng: random.Random, n: int, deg: list[int]) -> list[Edge]:
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for i in range(1, n):
        x = order[i]
        choices = [y for y in order[:i] if deg[y] < 3]
        y = rng.choice(choices)
        deg[x] += 1
        deg[y] += 1
        edges.append(norm_edge(x, y))
    return edges


def random_subcubic(n: int, seed: int, connected: bool = True, m: int | None = None) -> Graph:
    """Random subcubic graph by a degree-capped random edge process.

    With ``connected`` a random subcubic spanning tree is laid down first.
    The edge target is drawn uniformly from the feasible range unless ``m``
    is given; the process may stop short of it when the degree caps bite.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    rng = _rng("subcubic", n, seed, int(connected))
    deg = [0] * n
    edges = set(_random_tree_edges(rng, n, deg)) if connected else set()
    lo = n - 1 if connected else 0
    target = rng.randint(lo, (3 * n) // 2) if m is None else m
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if len(edges) >= target:
            break
        if deg[u] < 3 and deg[v] < 3 and (u, v) not in edges:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    g = Graph(n, edges)
    assert g.is_subcubic() and (not connected or g.is_connected())
    return g


def _within(adj: list[set[int]], u: int, v: int, limit: int) -> bool:
    """Is ``dist(u, v) <= limit``?"""
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if dist[x] == limit:
            continue
        for y in adj[x]:
            if y not in dist:
                if y == v:
                    return True
                dist[y] = dist[x] + 1
                queue.append(y)
    return False


def random_subcubic_girth(n: int, g: int, seed: int, m: int | None = None,
                          retries: int = 50) -> Graph:
    """Random connected subcubic graph of girth at least ``g``.

    Starts from a random subcubic spanning tree; an edge ``uv`` is accepted
    only if ``dist(u, v) >= g - 1`` beforehand.  When ``m`` is given the
    process retries with fresh streams until it reaches ``m`` edges.
    """
    if n < 1 or g < 3:
        raise PreconditionError("need n >= 1 and g >= 3")
    for attempt in range(retries):
        rng = _rng("girth", n, g, seed, attempt)
        deg = [0] * n
        edges = _random_tree_edges(rng, n, deg)
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        target = rng.randint(n - 1, (3 * n) // 2) if m is None else m
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        for u, v in pairs:
            if len(edges) >= target:
                break
            if deg[u] < 3 and deg[v] < 3 and v not in adj[u] and not _within(adj, u, v, g - 2):
                edges.append((u, v))
                adj[u].add(v)
                adj[v].add(u)
                deg[u] += 1
                deg[v] += 1
        if m is None or len(edges) == m:
            out = Graph(n, edges)
            girth = out.girth()
            assert girth is None or girth >= g
            return out
    raise PreconditionError(f"no connected subcubic graph with n={n}, m={m}, girth>={g} "
                            f"found in {retries} attempts")


def random_cubic(n: int, seed: int, retries: int = 1000) -> Graph:
    """Random simple cubic graph from the pairing model with rejection."""
    if n < 4 or n % 2:
        raise PreconditionError("cubic graphs need even n >= 4")
    for attempt in range(retries):
        rng = _rng("cubic", n, seed, attempt)
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = norm_edge(u, v)
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, edges)
    raise PreconditionError(f"pairing model failed {retries} times for n={n}")


def random_tree(n: int, seed: int) -> Graph:
    """Random subcubic tree."""
    rng = _rng("tree", n, seed)
    return Graph(n, _random_tree_edges(rng, n, [0] * n))


# -- bridge-rich instances ----------------------------------------------------------------

# small blocks with at least one vertex of degree <= 2 to hang bridges on
_BLOCKS: tuple[tuple[int, tuple[Edge, ...]], ...] = (
    (1, ()),
    (3, tuple(_cycle(3))),
    (4, tuple(_cycle(4))),
    (5, tuple(_cycle(5))),
    (6, tuple(_cycle(6))),
    (5, tuple(_complete_bipartite(2, 3))),
    (5, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4))),   # K4 with one edge subdivided
    (6, ((0, 1), (0, 4), (0, 5), (1, 2), (1, 3), (2, 4), (3, 5), (2, 3))),
    (4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))),                      # diamond
)


def random_bridged_subcubic(n: int, seed: int) -> Graph:
    """Random connected subcubic graph assembled from small blocks joined by bridges.

    Blocks are drawn from a fixed menu (single vertices, short cycles,
    ``K_{2,3}``, subdivided ``K_4``, diamonds) and attached one at a time by
    an edge between two vertices of spare degree.  Such graphs have many
    bridges, good and bad, which plain random graphs rarely do.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    rng = _rng("bridged", n, seed)
    edges: list[Edge] = []
    deg: list[int] = []
    while len(deg) < n:
        base = len(deg)
        outside = [x for x in range(base) if deg[x] < 3]
        size, block = rng.choice([b for b in _BLOCKS if b[0] <= n - base])
        bdeg = [0] * size
        for u, v in block:
            bdeg[u] += 1
            bdeg[v] += 1
        spare = [x for x in range(size) if bdeg[x] < 3]
        if len(outside) == 1 and base + size < n and len(spare) == 1 and bdeg[spare[0]] == 2:
            continue  # attaching would leave no vertex to hang the next block on
        deg.extend(bdeg)
        edges.extend((base + u, base + v) for u, v in block)
        if base:
            x, y = base + rng.choice(spare), rng.choice(outside)
            edges.append(norm_edge(x, y))
            deg[x] += 1
            deg[y] += 1
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, [norm_edge(perm[u], perm[v]) for u, v in edges])
    assert g.is_connected() and g.is_subcubic()
    return g


def accounting_gap_example() -> Graph:
    """A 29-vertex graph where the canonical reduction at vertex 0 loses four good bridges.

    Vertex 0 has degree 2 with neighbours 1 and 2.  Vertex 2 subdivides an
    edge of a ``K_4`` (every vertex on that side has degree 3).  Vertex 1
    leads through good bridges to two blocks, each a ``K_4`` with two
    disjoint edges subdivided; the second subdivision vertex of each carries
    a bridge to a ``K_{2,3}`` endblock.  Deleting ``{0, 1}`` and inserting
    the replacement edge from a block to vertex 2 leaves that block's
    endblock bridge without a low-degree vertex on the near side, so the
    step loses 3 edges and 4 good bridges.
    """
    edges = [(0, 1), (0, 2),
             # K4 on 3..6 with edge 3-4 subdivided by 2
             (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    nxt = 7
    for _ in range(2):
        up, p, q, r, s, x = range(nxt, nxt + 6)
        a1, a2, y, t1, t2 = range(nxt + 6, nxt + 11)
        nxt += 11
        edges += [(1, up), (up, p), (up, q), (x, r), (x, s), (p, r), (p, s), (q, r), (q, s),
                  (x, y), (a1, y), (a1, t1), (a1, t2), (a2, y), (a2, t1), (a2, t2)]
    return Graph(nxt, [norm_edge(u, v) for u, v in edges])
