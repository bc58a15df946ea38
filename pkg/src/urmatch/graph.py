"""Immutable simple graphs on the vertex set ``0..n-1``.

Everything downstream (verifiers, certifiers, generators) consumes the
:class:`Graph` defined here.  Mutation-style helpers such as
:meth:`Graph.induced_delete` and :meth:`Graph.add_edge` return new values.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import GraphFormatError, PreconditionError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with dense integer vertices.

    Isolated vertices are allowed; ``n`` may exceed the number of covered
    vertices.
    """

    __slots__ = ("n", "edges", "adj", "_sorted")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphFormatError(f"negative order {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        es: set[Edge] = set()
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in {pair!r}", item=pair)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", item=pair)
            e = norm_edge(u, v)
            if e in es:
                raise GraphFormatError(f"duplicate edge {e}", item=pair)
            es.add(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._sorted: tuple[Edge, ...] | None = None

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Edge]) -> "Graph":
        return cls(n, pairs)

    # -- basic queries ------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> tuple[Edge, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.edges))
        return self._sorted

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise PreconditionError(f"invalid vertex {v} for graph of order {self.n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adj)

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, ordered by smallest member."""
        seen = [False] * self.n
        parts = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            part = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        part.append(y)
                        queue.append(y)
            parts.append(sorted(part))
        return parts

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def girth(self) -> int | None:
        """Length of a shortest cycle, or ``None`` for forests.

        One breadth-first search per vertex; O(n*m).
        """
        best = None
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                if best is not None and 2 * dist[x] + 1 >= best:
                    break
                for y in self.adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        length = dist[x] + dist[y] + 1
                        if best is None or length < best:
                            best = length
        return best

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> list[int] | None:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
        return color

    # -- derived graphs -----------------------------------------------------

    def induced_delete(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        """Delete a vertex set.

        Returns ``(H, old)`` where ``old[i]`` is the vertex of ``self`` that
        became vertex ``i`` of ``H``; surviving vertices keep their order.
        """
        gone = set(removed)
        for v in gone:
            self._check_vertex(v)
        old = [v for v in range(self.n) if v not in gone]
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), edges), old

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` (relabelled in sorted order)."""
        keep = set(vertices)
        return self.induced_delete(v for v in range(self.n) if v not in keep)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise PreconditionError(f"loop at vertex {u}")
        if v in self.adj[u]:
            raise PreconditionError(f"edge {norm_edge(u, v)} already present")
        return Graph(self.n, list(self.edges) + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        if e not in self.edges:
            raise PreconditionError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    # -- small-graph recognition ---------------------------------------------

    def is_k33(self) -> bool:
        return (self.n == 6 and self.m == 9 and self.is_cubic()
                and self.is_bipartite())

    def is_k23(self) -> bool:
        # With n=5, m=6 and degrees 3,3,2,2,2 the two bipartition sides must
        # carry degree sums 6 each, which forces {3,3} | {2,2,2}.
        return (self.n == 5 and self.m == 6
                and sorted(self.degrees()) == [2, 2, 2, 3, 3]
                and self.is_bipartite())

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def is_isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Permutation search; only meant for tiny test graphs."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = h.edges
    for perm in permutations(range(g.n)):
        if all(norm_edge(perm[u], perm[v]) in target for u, v in g.edges):
            return True
    return False


# -- edge-list text format ----------------------------------------------------

def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {line!r}", line=lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None


def parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphFormatError("empty input", line=1)
    n, m = _ints(lines[0], 1, 2)
    if n < 0 or m < 0:
        raise GraphFormatError("negative header value", line=1)
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1}",
                               line=len(lines) if len(lines) - 1 < m else m + 2)
    seen: dict[Edge, int] = {}
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", item=(u, v), line=lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", item=(u, v), line=lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate of edge on line {seen[e]}", item=e, line=lineno)
        seen[e] = lineno
        edges.append(e)
    return Graph(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_edge_list(g))
