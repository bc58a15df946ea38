"""Constructive lower bound ``3 |M| >= n - 1`` for subcubic graphs of girth at least 7.

The outer routine handles trees, a pendant vertex and cubic graphs; every
other case goes to :func:`certify_lemma1`, which proves the stronger
``3 |M| >= n`` for connected non-tree non-cubic graphs by removing a maximal
path ``u_1 v_1 ... v_k u_{k+1}`` whose ``v_i`` have degree 2 and matching the
``k`` edges ``u_i v_i``.

With ``require_girth=False`` the same engine runs on graphs of smaller
girth.  The bound is then not guaranteed: failed counting checks are
collected in ``anomalies`` instead of raised.  Uniquely-restricted
verification of every lift stays a hard check in both modes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import PreconditionError, ProofFalsificationError
from .graph import Edge, Graph, norm_edge
from .matching import Matching, forest_max_matching, is_uniquely_restricted
from .structure import maximal_degree2_path, spanning_tree_endvertex

GIRTH_RULES = ("DEG1", "PATH", "TREE_DP", "CUBIC_ENDVERTEX")


@dataclass
class GirthStep:
    rule: str
    level: str
    n_before: int
    deleted: tuple[int, ...] = ()
    contributed: tuple[Edge, ...] = ()
    focus: dict[str, int] = field(default_factory=dict)
    path: tuple[int, ...] = ()
    k: int = 0
    c: int = 0
    links: int = 0
    components: int = 0
    depth: int = 0

    @property
    def n_after(self) -> int:
        return self.n_before - len(self.deleted)

    def to_line(self) -> str:
        parts = [self.rule, "deleted=[" + ",".join(map(str, self.deleted)) + "]",
                 "contributed=[" + ",".join("(%d,%d)" % e for e in self.contributed) + "]",
                 f"n:{self.n_before}->{self.n_after}"]
        if self.rule == "PATH":
            parts.append(f"k={self.k} c={self.c} links={self.links}")
        return " ".join(parts)


@dataclass
class GirthCertificate:
    matching: Matching
    trace: list[GirthStep]
    n: int
    girth: int | None
    level: str
    verified: bool
    anomalies: list[str] = field(default_factory=list)

    @property
    def target(self) -> int:
        """Smallest matching size meeting the bound at this level."""
        return -(-(self.n - 1) // 3) if self.level == "theorem" else -(-self.n // 3)

    @property
    def achieved(self) -> int:
        return len(self.matching)

    @property
    def bound_met(self) -> bool:
        return self.achieved >= self.target

    def serialize(self) -> str:
        lines = [s.to_line() + "\n" for s in self.trace]
        return "".join(lines) + "".join(f"{u} {v}\n" for u, v in self.matching.sorted_edges())


class _Run:
    def __init__(self, strict: bool):
        self.strict = strict
        self.trace: list[GirthStep] = []
        self.anomalies: list[str] = []

    def check(self, ok: bool, message: str, g: Graph) -> None:
        if ok:
            return
        if self.strict:
            raise ProofFalsificationError(message, trace=self.trace, graph=g)
        self.anomalies.append(message)

    def verify(self, g: Graph, edges: list[Edge], what: str) -> Matching:
        m = Matching(g, edges)
        verdict = is_uniquely_restricted(g, m)
        if not verdict:
            raise ProofFalsificationError(
                f"{what}: lifted matching has alternating cycle {verdict.witness.cycle}",
                trace=self.trace, graph=g)
        return m

    # each routine returns matching edges in the ids of its own graph

    def tree(self, g: Graph, labels: list[int], depth: int, level: str) -> list[Edge]:
        m = forest_max_matching(g)
        self.trace.append(GirthStep(
            "TREE_DP", level, g.n, deleted=tuple(sorted(labels)),
            contributed=tuple(sorted(norm_edge(labels[a], labels[b]) for a, b in m.edges)),
            depth=depth))
        self.check(3 * len(m) >= g.n - 1, f"tree on {g.n} vertices with matching {len(m)}", g)
        return sorted(m.edges)

    def _pieces(self, g: Graph, removed, labels: list[int]):
        h, old = g.induced_delete(removed)
        for comp in h.components():
            sub, sub_old = h.subgraph(comp)
            back = [old[x] for x in sub_old]
            yield sub, back, [labels[x] for x in back]

    def _step(self, rule: str, level: str, g: Graph, labels: list[int], deleted,
              contributed, depth: int, **extra) -> GirthStep:
        mapped = sorted(norm_edge(labels[a], labels[b]) for a, b in contributed)
        step = GirthStep(rule, level, g.n, deleted=tuple(sorted(labels[x] for x in deleted)),
                         contributed=tuple(mapped), depth=depth, **extra)
        self.trace.append(step)
        return step

    def theorem(self, g: Graph, labels: list[int], depth: int) -> list[Edge]:
        if g.is_forest():
            return self.tree(g, labels, depth, "theorem")
        deg = g.degrees()
        pendant = next((x for x in range(g.n) if deg[x] == 1), None)
        if pendant is not None:
            u = pendant
            (v,) = g.adj[u]
            pieces = list(self._pieces(g, {u, v}, labels))
            self._step("DEG1", "theorem", g, labels, {u, v}, [(u, v)], depth,
                       focus={"u": labels[u], "v": labels[v]}, components=len(pieces))
            self.check(len(pieces) <= 2, f"pendant reduction left {len(pieces)} components", g)
            edges = [(u, v)]
            for sub, back, sub_labels in pieces:
                edges += [(back[a], back[b]) for a, b in self.theorem(sub, sub_labels, depth + 1)]
            m = self.verify(g, edges, "DEG1")
        elif g.is_cubic():
            u = spanning_tree_endvertex(g)
            h, old = g.induced_delete({u})
            self._step("CUBIC_ENDVERTEX", "theorem", g, labels, {u}, [], depth,
                       focus={"u": labels[u]})
            self.check(h.is_connected() and not h.is_cubic() and not h.is_forest(),
                       "endvertex deletion left a disconnected, cubic or acyclic graph", g)
            inner = self.lemma(h, [labels[x] for x in old], depth + 1)
            m = self.verify(g, [(old[a], old[b]) for a, b in inner], "CUBIC_ENDVERTEX")
        else:
            m = Matching(g, self.lemma(g, labels, depth))
        self.check(3 * len(m) >= g.n - 1,
                   f"theorem level: 3*{len(m)} < {g.n} - 1 on a graph with {g.m} edges", g)
        return sorted(m.edges)

    def lemma(self, g: Graph, labels: list[int], depth: int) -> list[Edge]:
        if not g.is_connected() or g.is_forest() or g.is_cubic():
            raise ProofFalsificationError(
                "inner routine reached a disconnected, acyclic or cubic graph",
                trace=self.trace, graph=g)
        deg = g.degrees()
        pendant = next((x for x in range(g.n) if deg[x] == 1), None)
        if pendant is not None:
            u = pendant
            (v,) = g.adj[u]
            pieces = list(self._pieces(g, {u, v}, labels))
            trees = sum(1 for sub, _, _ in pieces if sub.is_forest())
            self._step("DEG1", "lemma", g, labels, {u, v}, [(u, v)], depth,
                       focus={"u": labels[u], "v": labels[v]}, components=len(pieces), c=trees)
            self.check(len(pieces) <= 2, f"pendant reduction left {len(pieces)} components", g)
            self.check(trees <= 1, f"pendant reduction left {trees} tree components", g)
            edges = [(u, v)]
            for sub, back, sub_labels in pieces:
                inner = (self.tree(sub, sub_labels, depth + 1, "lemma") if sub.is_forest()
                         else self.lemma(sub, sub_labels, depth + 1))
                edges += [(back[a], back[b]) for a, b in inner]
            m = self.verify(g, edges, "DEG1")
        else:
            seed = min(x for x in range(g.n) if deg[x] == 2)
            path = maximal_degree2_path(g, seed)
            on_path = set(path.vertices)
            pieces = list(self._pieces(g, on_path, labels))
            h_links = sum(1 for x in on_path for y in g.adj[x] if y not in on_path)
            trees = []
            for sub, back, _ in pieces:
                if sub.is_forest():
                    inside = set(back)
                    trees.append(sum(1 for x in on_path for y in g.adj[x] if y in inside))
            k = path.k
            self._step("PATH", "lemma", g, labels, on_path, path.matching_edges(), depth,
                       focus={"seed": labels[seed]}, path=tuple(labels[x] for x in path.vertices),
                       k=k, c=len(trees), links=h_links, components=len(pieces))
            self.check(all(t >= 2 for t in trees), "a tree component has one edge to the path", g)
            self.check(h_links <= k + 3, f"{h_links} edges leave a path with k={k}", g)
            self.check(len(trees) <= k - 1, f"path with k={k} leaves c={len(trees)} trees", g)
            edges = list(path.matching_edges())
            for sub, back, sub_labels in pieces:
                inner = (self.tree(sub, sub_labels, depth + 1, "lemma") if sub.is_forest()
                         else self.lemma(sub, sub_labels, depth + 1))
                edges += [(back[a], back[b]) for a, b in inner]
            m = self.verify(g, edges, "PATH")
        self.check(3 * len(m) >= g.n, f"inner level: 3*{len(m)} < {g.n}", g)
        return sorted(m.edges)


def _prepare(g: Graph, require_girth: bool) -> int | None:
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("need a connected graph")
    if not g.is_subcubic():
        raise PreconditionError("need a subcubic graph")
    girth = g.girth()
    if require_girth and girth is not None and girth < 7:
        raise PreconditionError(f"girth {girth} < 7")
    return girth


def certify_theorem2(g: Graph, *, require_girth: bool = True) -> GirthCertificate:
    """Uniquely restricted matching with ``3 |M| >= n - 1`` for girth >= 7 or trees."""
    girth = _prepare(g, require_girth)
    run = _Run(strict=require_girth)
    edges = run.theorem(g, list(range(g.n)), 0)
    m = run.verify(g, edges, "final")
    return GirthCertificate(m, run.trace, g.n, girth, "theorem", True, run.anomalies)


def certify_lemma1(g: Graph, *, require_girth: bool = True) -> GirthCertificate:
    """Uniquely restricted matching with ``3 |M| >= n`` for non-tree, non-cubic inputs."""
    girth = _prepare(g, require_girth)
    if g.is_forest() or g.is_cubic():
        raise PreconditionError("need a graph that is neither a tree nor cubic")
    run = _Run(strict=require_girth)
    edges = run.lemma(g, list(range(g.n)), 0)
    m = run.verify(g, edges, "final")
    return GirthCertificate(m, run.trace, g.n, girth, "lemma", True, run.anomalies)


_LINE_RE = re.compile(r"^(?P<rule>[A-Z0-9_]+) deleted=\[(?P<deleted>[0-9,]*)\] "
                      r"contributed=\[(?P<contrib>[0-9,()]*)\] n:(?P<n0>\d+)->(?P<n1>\d+)"
                      r"(?: k=(?P<k>\d+) c=(?P<c>\d+) links=(?P<links>\d+))?$")


def parse_girth_trace(text: str) -> tuple[list[GirthStep], list[Edge]]:
    steps, edges = [], []
    for line in text.splitlines():
        mt = _LINE_RE.match(line)
        if mt:
            step = GirthStep(
                mt.group("rule"), "", int(mt.group("n0")),
                deleted=tuple(int(x) for x in mt.group("deleted").split(",") if x),
                contributed=tuple((int(a), int(b)) for a, b in
                                  re.findall(r"\((\d+),(\d+)\)", mt.group("contrib"))))
            if mt.group("k") is not None:
                step.k, step.c, step.links = (int(mt.group(x)) for x in ("k", "c", "links"))
            steps.append(step)
        elif line.strip():
            u, v = line.split()
            edges.append(norm_edge(int(u), int(v)))
    return steps, edges
