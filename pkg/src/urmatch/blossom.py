"""Edmonds' augmenting-path search on general graphs.

Used for maximum matchings and, more importantly, for exact alternating
cycle detection: an ``M``-alternating cycle through the matched edge ``uv``
is the same thing as an augmenting path between ``u`` and ``v`` for
``M - uv`` that avoids the edge ``uv``.
"""

from __future__ import annotations

from collections import deque
from typing import Collection, Sequence


def augmenting_path(
    adj: Sequence[Collection[int]],
    mate: list[int],
    root: int,
    allowed: Collection[int] | None = None,
    skip_edge: tuple[int, int] | None = None,
) -> list[int] | None:
    """Search an augmenting path starting at the exposed vertex ``root``.

    Returns the vertex sequence from the far exposed endpoint back to
    ``root`` (alternating non-matched / matched edges), or ``None``.
    ``allowed`` restricts the search to a vertex subset; ``skip_edge`` hides
    one edge.  ``mate`` is not modified.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])
    sa, sb = skip_edge if skip_edge is not None else (-1, -1)

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if allowed is not None and to not in allowed:
                continue
            if (v == sa and to == sb) or (v == sb and to == sa):
                continue
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    path = []
                    x = to
                    while x != -1:
                        path.append(x)
                        px = parent[x]
                        path.append(px)
                        x = mate[px]
                    return path
                used[mate[to]] = True
                queue.append(mate[to])
    return None


def augment(mate: list[int], path: list[int]) -> None:
    """Flip ``mate`` along a path returned by :func:`augmenting_path`."""
    for i in range(0, len(path), 2):
        a, b = path[i], path[i + 1]
        mate[a] = b
        mate[b] = a


def maximum_matching(
    adj: Sequence[Collection[int]],
    allowed: Collection[int] | None = None,
    mate: list[int] | None = None,
) -> list[int]:
    """Maximum matching as a mate array (``-1`` = exposed)."""
    n = len(adj)
    mate = [-1] * n if mate is None else list(mate)
    verts = range(n) if allowed is None else sorted(allowed)
    # greedy start keeps the number of searches small
    for v in verts:
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1 and (allowed is None or w in allowed):
                    mate[v], mate[w] = w, v
                    break
    for v in verts:
        if mate[v] == -1:
            path = augmenting_path(adj, mate, v, allowed)
            if path is not None:
                augment(mate, path)
    return mate
