"""Constructive lower bound ``6 |M| >= m + b`` with ``b`` the number of good bridges.

The engine repeatedly picks a reduction (delete a few vertices around a
low-degree vertex, occasionally inserting one replacement edge), certifies
every component of what is left, and lifts the component matchings back by
adding one or two edges.  Each applied step is audited on actual counts:

    6 * gain >= (m_before - m_after) + (b_before - b_after)

together with the per-rule caps in :data:`RULE_CAPS`.  Summed over the
trace this inequality is the bound for the input graph.  Connected cubic
inputs have no good bridges and are delegated to the exact oracle (or a
heuristic beyond oracle scale); ``K_{3,3}`` is the one excluded graph.

The final sub-case FB (``u`` touches two good bridges while no edge at
``v`` is good) is kept for completeness but cannot occur: if ``uv`` lies on
a cycle, ``u`` has two non-bridge edges, and if ``uv`` is a bridge that is
not good, no edge on ``u``'s side is good either.
"""

from __future__ import annotations

import random
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import BudgetExhausted, PreconditionError, ProofFalsificationError
from .graph import Edge, Graph, norm_edge
from .matching import Matching, closes_alternating_cycle, format_matching, is_uniquely_restricted
from .oracle import DEFAULT_BUDGET, greedy_matching, nu_ur_exact
from .structure import BridgeReport, bridge_report

RULES = ("C1", "C2", "C3a", "C3b", "C4a", "C4b", "C5", "C6a", "C6b", "C7a", "C7b",
         "C8a", "C8b", "FA", "FB", "FC", "CUBIC_FALLBACK", "K33_EXCEPTION", "EMPTY")

# rule -> (max edges lost, max good bridges lost)
RULE_CAPS = {
    "C1": (3, 3), "C2": (3, 0), "C3a": (5, 1), "C3b": (3, 3),
    "C4a": (4, 1), "C4b": (5, 0), "C5": (6, 0), "C6a": (8, 4), "C6b": (6, 0),
    "C7a": (4, 2), "C7b": (3, 3), "C8a": (4, 2), "C8b": (3, 3),
    "FA": (6, 0), "FB": (4, 2), "FC": (8, 4),
}

DIRECT = "direct-union"
SWAP = "swap-on-inserted-edge"

CUBIC_EXACT_MAX_N = 24


@dataclass
class ReductionStep:
    """One applied rule.  Vertex ids are those of the input graph."""

    rule: str
    focus: dict[str, int] = field(default_factory=dict)
    deleted: tuple[int, ...] = ()
    inserted_edge: Edge | None = None
    contributed: tuple[Edge, ...] = ()
    removed: tuple[Edge, ...] = ()
    lift_rule: str = DIRECT
    m_before: int = 0
    m_after: int | None = None
    b_before: int = 0
    b_after: int | None = None
    depth: int = 0

    @property
    def gain(self) -> int:
        return len(self.contributed) - len(self.removed)

    @property
    def delta_m(self) -> int:
        return self.m_before - (self.m_after or 0)

    @property
    def delta_b(self) -> int:
        return self.b_before - (self.b_after or 0)

    def ledger_ok(self) -> bool:
        return 6 * self.gain >= self.delta_m + self.delta_b

    def within_caps(self) -> bool:
        if self.rule not in RULE_CAPS:
            return True
        cap_m, cap_b = RULE_CAPS[self.rule]
        return self.delta_m <= cap_m and self.delta_b <= cap_b

    def to_line(self) -> str:
        parts = [self.rule, "deleted=[" + ",".join(map(str, self.deleted)) + "]"]
        if self.inserted_edge is not None:
            parts.append("inserted=(%d,%d)" % self.inserted_edge)
        parts.append("contributed=[" + ",".join("(%d,%d)" % e for e in self.contributed) + "]")
        if self.removed:
            parts.append("removed=[" + ",".join("(%d,%d)" % e for e in self.removed) + "]")
        parts.append(f"m:{self.m_before}->{self.m_after or 0}")
        parts.append(f"bgood:{self.b_before}->{self.b_after or 0}")
        return " ".join(parts)


@dataclass
class Certificate:
    matching: Matching
    trace: list[ReductionStep]
    n: int
    m: int
    b_good: int
    b_all: int
    girth: int | None
    verified: bool
    exceptions: list[str] = field(default_factory=list)

    @property
    def target(self) -> Fraction:
        return Fraction(self.m + self.b_good, 6)

    @property
    def achieved(self) -> int:
        return len(self.matching)

    @property
    def bound_met(self) -> bool:
        return 6 * self.achieved >= self.m + self.b_good

    @property
    def is_k33(self) -> bool:
        return "K33_EXCEPTION" in self.exceptions

    def serialize(self) -> str:
        return "".join(s.to_line() + "\n" for s in self.trace) + format_matching(self.matching)


# -- candidate reductions --------------------------------------------------------------


@dataclass(frozen=True)
class _Plan:
    rule: str
    focus: tuple[tuple[str, int], ...]
    deleted: tuple[int, ...]
    contributed: tuple[Edge, ...]
    inserted: Edge | None = None

    def step(self, m_before: int, b_before: int) -> ReductionStep:
        return ReductionStep(
            rule=self.rule, focus=dict(self.focus), deleted=self.deleted,
            inserted_edge=self.inserted, contributed=self.contributed,
            lift_rule=SWAP if self.inserted else DIRECT,
            m_before=m_before, b_before=b_before)


def _plan(rule, deleted, contributed, inserted=None, **focus) -> _Plan:
    return _Plan(rule, tuple(focus.items()), tuple(sorted(deleted)),
                 tuple(norm_edge(*e) for e in contributed),
                 norm_edge(*inserted) if inserted else None)


def _other(g: Graph, x: int, *exclude: int) -> list[int]:
    return sorted(y for y in g.adj[x] if y not in exclude)


def _global_plans(g: Graph, rep: BridgeReport) -> Iterator[_Plan]:
    deg = g.degrees()
    for u in range(g.n):
        if deg[u] == 1:
            (v,) = g.adj[u]
            yield _plan("C1", {u, v}, [(u, v)], u=u, v=v)
    two = [x for x in range(g.n) if deg[x] == 2]
    for u in two:
        for v in _other(g, u):
            if v > u and deg[v] == 2 and g.adj[u] & g.adj[v]:
                (w,) = g.adj[u] & g.adj[v]
                yield _plan("C2", {u, v}, [(u, v)], u=u, v=v, w=w)
    for u in two:
        for v in _other(g, u):
            if deg[v] != 2 or g.adj[u] & g.adj[v]:
                continue
            (u1,) = _other(g, u, v)
            if rep.is_good(u, v):
                yield _plan("C3b", {u, v}, [(u, v)], u=u, v=v)
            else:
                yield _plan("C3a", {u, v, u1}, [(u, v)], u=u, v=v, u1=u1)


def _vertex_plans(g: Graph, rep: BridgeReport, v: int) -> Iterator[_Plan]:
    """Plans focused on the degree-2 vertex ``v``; canonical one first."""
    a, b = sorted(g.adj[v])
    if g.degree(a) != 3 or g.degree(b) != 3:
        return
    good_a = [x for x in rep.good_at(a) if x != v]
    good_b = [x for x in rep.good_at(b) if x != v]

    if g.has_edge(a, b):
        if good_b or good_a:
            u, w = (a, b) if good_b else (b, a)
            yield _plan("C4a", {u, v}, [(u, v)], u=u, v=v, w=w)
        else:
            yield _plan("C4b", {a, v, b}, [(a, v)], u=a, v=v, w=b)
        return

    common = g.adj[a] & g.adj[b]
    if len(common) == 3:
        yield _plan("C5", {a, v, b}, [(a, v)], u=a, v=v, w=b)
        return
    if len(common) == 2:
        if good_a or good_b:
            u, w = (a, b) if good_a else (b, a)
            u1 = (good_a or good_b)[0]
            yield _plan("C6a", {u, v, w, u1}, [(u, u1), (v, w)], u=u, v=v, w=w, u1=u1)
        else:
            yield _plan("C6b", {a, v, b}, [(v, b)], u=a, v=v, w=b)
        return

    ua, ub = rep.is_good(a, v), rep.is_good(v, b)
    if ua and ub:
        for u, w, gu in ((a, b, good_a), (b, a, good_b)):
            if not gu:
                yield _plan("C7a", {u, v}, [(u, v)], u=u, v=v, w=w)
            else:
                for u1 in gu:
                    (u2,) = _other(g, u, v, u1)
                    yield _plan("C7b", {u, v}, [(u, v)], inserted=(u1, w),
                                u=u, v=v, w=w, u1=u1, u2=u2)
        return
    if ua or ub:
        u, w, gu = (a, b, good_a) if ua else (b, a, good_b)
        if len(gu) < 2:
            yield _plan("C8a", {u, v}, [(u, v)], u=u, v=v, w=w)
        else:
            for u1 in gu:
                (u2,) = _other(g, u, v, u1)
                yield _plan("C8b", {u, v}, [(u, v)], inserted=(u1, w),
                            u=u, v=v, w=w, u1=u1, u2=u2)
        return

    if not good_a and not good_b:
        yield _plan("FA", {a, v, b}, [(a, v)], u=a, v=v, w=b)
    elif len(good_a) == 2 or len(good_b) == 2:
        u, w = (a, b) if len(good_a) == 2 else (b, a)
        yield _plan("FB", {u, v}, [(u, v)], u=u, v=v, w=w)
    else:
        u, w, gu = (a, b, good_a) if len(good_a) == 1 else (b, a, good_b)
        u1 = gu[0]
        yield _plan("FC", {u, v, w, u1}, [(u, u1), (v, w)], u=u, v=v, w=w, u1=u1)


def _candidate_plans(g: Graph, rep: BridgeReport) -> Iterator[_Plan]:
    """All reductions in preference order; the first one is the canonical choice."""
    yield from _global_plans(g, rep)
    for v in range(g.n):
        if g.degree(v) == 2:
            yield from _vertex_plans(g, rep, v)


def find_reduction(g: Graph, rep: BridgeReport | None = None) -> ReductionStep:
    """The first applicable rule for a connected, subcubic, non-cubic graph (unapplied)."""
    if g.n < 2 or not g.is_connected() or not g.is_subcubic() or g.is_cubic():
        raise PreconditionError("find_reduction needs a connected subcubic non-cubic graph, n >= 2")
    rep = rep or bridge_report(g)
    for plan in _candidate_plans(g, rep):
        return plan.step(g.m, rep.b_good)
    raise ProofFalsificationError("no reduction rule applies", graph=g)


def apply_reduction(g: Graph, step: ReductionStep) -> tuple[Graph, list[int], Edge | None]:
    """Residual graph of ``step``: ``(H, old, inserted)``, ``old[i]`` = parent id of ``i``."""
    h, old = g.induced_delete(step.deleted)
    inserted = None
    if step.inserted_edge is not None:
        new = {o: i for i, o in enumerate(old)}
        a, b = step.inserted_edge
        if g.has_edge(a, b):
            raise ProofFalsificationError(f"edge {step.inserted_edge} to insert already exists",
                                          graph=g)
        inserted = norm_edge(new[a], new[b])
        h = h.add_edge(*inserted)
    return h, old, inserted


def lift(g: Graph, step: ReductionStep, residual: list[Edge]) -> Matching:
    """Extend a uniquely restricted matching of the residual to ``g``.

    ``residual`` uses the vertex ids of ``g`` (the inserted edge, if any, is
    given by its endpoints in ``g``).  On a swap lift the inserted edge is
    traded for the two edges ``uu'`` and ``vw``.  The step's ``contributed``
    and ``removed`` fields are updated in place.
    """
    edges = {norm_edge(*e) for e in residual}
    contributed = list(step.contributed)
    removed: list[Edge] = []
    if step.lift_rule == SWAP and step.inserted_edge in edges:
        f = step.focus
        edges.discard(step.inserted_edge)
        removed.append(step.inserted_edge)
        contributed = [norm_edge(f["u"], f["u1"]), norm_edge(f["v"], f["w"])]
    step.contributed = tuple(contributed)
    step.removed = tuple(removed)
    m = Matching(g, edges | set(contributed))
    verdict = is_uniquely_restricted(g, m)
    if not verdict:
        raise ProofFalsificationError(
            f"lift of {step.rule} is not uniquely restricted; "
            f"alternating cycle {verdict.witness.cycle}", trace=[step], graph=g)
    return m


# -- cubic inputs ------------------------------------------------------------------------


def _improve(g: Graph, edges: set[Edge]) -> bool:
    """One 1-out/2-in exchange keeping the matching uniquely restricted."""
    for out in sorted(edges):
        base = edges - {out}
        mate = [-1] * g.n
        for u, v in base:
            mate[u], mate[v] = v, u
        covered = {x for e in base for x in e}
        free_edges = [e for e in g.sorted_edges()
                      if mate[e[0]] == -1 and mate[e[1]] == -1 and e != out]
        for i, e1 in enumerate(free_edges):
            if closes_alternating_cycle(g, mate, covered, *e1):
                continue
            mate[e1[0]], mate[e1[1]] = e1[1], e1[0]
            covered.update(e1)
            for e2 in free_edges[i + 1:]:
                if mate[e2[0]] != -1 or mate[e2[1]] != -1:
                    continue
                if not closes_alternating_cycle(g, mate, covered, *e2):
                    edges.clear()
                    edges.update(base | {e1, e2})
                    return True
            mate[e1[0]] = mate[e1[1]] = -1
            covered.difference_update(e1)
    return False


def cubic_heuristic(g: Graph, retries: int = 20, seed: int = 0) -> Matching:
    """Greedy acyclic matching, greedy uniquely restricted extension, then exchanges."""
    need = -(-g.m // 6)
    best: set[Edge] = set()
    rng = random.Random(seed)
    order = g.sorted_edges()
    for attempt in range(retries):
        if attempt:
            order = list(order)
            rng.shuffle(order)
        acyclic = greedy_matching(g, "ac", order)
        mate = acyclic.mate()
        covered = set(acyclic.covered)
        edges = set(acyclic.edges)
        for u, v in order:
            if mate[u] == -1 and mate[v] == -1 and not closes_alternating_cycle(g, mate, covered, u, v):
                mate[u], mate[v] = v, u
                covered.update((u, v))
                edges.add((u, v))
        while len(edges) < need and _improve(g, edges):
            pass
        if len(edges) > len(best):
            best = edges
        if len(best) >= need:
            break
    return Matching(g, best)


# -- the recursion -------------------------------------------------------------------------


@dataclass
class _Context:
    trace: list[ReductionStep]
    exceptions: list[str]
    strict: bool
    budget: int
    cubic_exact_max_n: int


def _cubic(g: Graph, labels: list[int], depth: int, ctx: _Context) -> list[Edge]:
    if g.n <= ctx.cubic_exact_max_n:
        try:
            res = nu_ur_exact(g, ctx.budget, stop_at=-(-g.m // 6))
        except BudgetExhausted as exc:
            raise BudgetExhausted(f"cubic fallback: {exc}", best=exc.best,
                                  explored=exc.explored) from None
        m = res.witness
        how = "exact"
    else:
        m = cubic_heuristic(g)
        how = "heuristic"
    ctx.exceptions.append(f"CUBIC_FALLBACK {how} n={g.n} m={g.m} achieved={len(m)}")
    step = ReductionStep("CUBIC_FALLBACK", deleted=tuple(labels),
                         contributed=tuple(norm_edge(labels[a], labels[b]) for a, b in m.edges),
                         lift_rule="none", m_before=g.m, m_after=0, b_before=0, b_after=0,
                         depth=depth)
    step.contributed = tuple(sorted(step.contributed))
    ctx.trace.append(step)
    if 6 * len(m) < g.m:
        if how == "exact":
            raise ProofFalsificationError(
                f"cubic graph with nu_ur = {len(m)} < m/6 = {g.m}/6", trace=ctx.trace, graph=g)
        raise BudgetExhausted(f"cubic heuristic reached {len(m)} < m/6 = {g.m}/6 (n={g.n})")
    return sorted(m.edges)


def _certify(g: Graph, labels: list[int], depth: int, ctx: _Context) -> list[Edge]:
    """Certify a connected graph; returns matching edges in local ids."""
    if g.m == 0:
        ctx.trace.append(ReductionStep("EMPTY", deleted=tuple(labels), lift_rule="none",
                                       m_after=0, b_after=0, depth=depth))
        return []
    if g.is_k33():
        raise ProofFalsificationError("K_{3,3} arose as a residual component",
                                      trace=ctx.trace, graph=g)
    if g.is_cubic():
        if depth > 0:
            raise ProofFalsificationError("cubic residual component", trace=ctx.trace, graph=g)
        return _cubic(g, labels, depth, ctx)

    rep = bridge_report(g)
    chosen = None
    for plan in _candidate_plans(g, rep):
        step = plan.step(g.m, rep.b_good)
        h, old, inserted = apply_reduction(g, step)
        step.m_after = h.m
        step.b_after = bridge_report(h).b_good
        gain = len(step.contributed)
        ok = 6 * gain >= step.delta_m + step.delta_b and step.within_caps()
        if ok:
            chosen = (step, h, old, inserted)
            break
        where = ",".join(f"{k}={labels[x]}" for k, x in step.focus.items())
        msg = (f"ACCOUNTING_GAP {step.rule} at {where}: dm={step.delta_m} db={step.delta_b} "
               f"gain={gain} cap={RULE_CAPS[step.rule]}")
        if ctx.strict:
            raise ProofFalsificationError(msg, trace=ctx.trace + [step], graph=g)
        ctx.exceptions.append(msg)
    if chosen is None:
        raise ProofFalsificationError("no reduction passes its accounting",
                                      trace=ctx.trace, graph=g)
    step, h, old, inserted = chosen
    step.depth = depth
    ctx.trace.append(step)

    residual: list[Edge] = []
    for comp in h.components():
        sub, sub_old = h.subgraph(comp)
        sub_labels = [labels[old[x]] for x in sub_old]
        for a, b in _certify(sub, sub_labels, depth + 1, ctx):
            residual.append((sub_old[a], sub_old[b]))
    # residual ids are ids of h; translate to g (the inserted edge maps to its endpoints)
    in_g = [norm_edge(old[a], old[b]) for a, b in residual]
    m = lift(g, step, in_g)

    # from here on the step speaks in input-graph ids
    step.focus = {k: labels[x] for k, x in step.focus.items()}
    step.deleted = tuple(sorted(labels[x] for x in step.deleted))
    if step.inserted_edge is not None:
        step.inserted_edge = norm_edge(labels[step.inserted_edge[0]], labels[step.inserted_edge[1]])
    step.contributed = tuple(norm_edge(labels[a], labels[b]) for a, b in step.contributed)
    step.removed = tuple(norm_edge(labels[a], labels[b]) for a, b in step.removed)
    if not step.ledger_ok():
        raise ProofFalsificationError(f"step {step.rule} violates 6*gain >= dm + db after lift",
                                      trace=ctx.trace, graph=g)
    return sorted(m.edges)


def certify_theorem1(g: Graph, *, strict: bool = False, budget: int = DEFAULT_BUDGET,
                     cubic_exact_max_n: int = CUBIC_EXACT_MAX_N) -> Certificate:
    """Uniquely restricted matching with ``6 |M| >= m + b_good`` plus its reduction trace.

    ``strict`` turns the first failed step accounting into a
    :class:`ProofFalsificationError`; otherwise the failure is recorded in
    ``exceptions`` and the next candidate reduction is tried.
    """
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("certify_theorem1 needs a connected graph")
    if not g.is_subcubic():
        raise PreconditionError("certify_theorem1 needs a subcubic graph")
    rep = bridge_report(g)
    girth = g.girth()
    if g.is_k33():
        m = Matching(g, [(0, 3)] if g.has_edge(0, 3) else [g.sorted_edges()[0]])
        step = ReductionStep("K33_EXCEPTION", contributed=tuple(m.sorted_edges()),
                             lift_rule="none", m_before=g.m, m_after=0, b_before=0, b_after=0)
        return Certificate(m, [step], g.n, g.m, rep.b_good, rep.b_all, girth,
                           bool(is_uniquely_restricted(g, m)), ["K33_EXCEPTION"])

    ctx = _Context([], [], strict, budget, cubic_exact_max_n)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 200))
    try:
        edges = _certify(g, list(range(g.n)), 0, ctx)
    finally:
        sys.setrecursionlimit(limit)
    m = Matching(g, edges)
    verified = bool(is_uniquely_restricted(g, m))
    if not verified:
        raise ProofFalsificationError("final matching is not uniquely restricted",
                                      trace=ctx.trace, graph=g)
    cert = Certificate(m, ctx.trace, g.n, g.m, rep.b_good, rep.b_all, girth, verified,
                       ctx.exceptions)
    if not cert.bound_met:
        raise ProofFalsificationError(
            f"certificate misses the bound: 6*{cert.achieved} < {g.m} + {rep.b_good}",
            trace=ctx.trace, graph=g)
    return cert


# -- trace text format ---------------------------------------------------------------------

_STEP_RE = re.compile(
    r"^(?P<rule>[A-Z0-9_a-z]+) deleted=\[(?P<deleted>[0-9,]*)\]"
    r"(?: inserted=\((?P<ins>\d+,\d+)\))?"
    r" contributed=\[(?P<contrib>[0-9,()]*)\]"
    r"(?: removed=\[(?P<removed>[0-9,()]*)\])?"
    r" m:(?P<m0>\d+)->(?P<m1>\d+) bgood:(?P<b0>\d+)->(?P<b1>\d+)$")


def _pairs(text: str | None) -> tuple[Edge, ...]:
    if not text:
        return ()
    return tuple((int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", text))


def parse_trace(text: str) -> tuple[list[ReductionStep], list[Edge]]:
    """Inverse of :meth:`Certificate.serialize`: ``(steps, matching_edges)``."""
    steps, edges = [], []
    for line in text.splitlines():
        mt = _STEP_RE.match(line)
        if mt:
            ins = mt.group("ins")
            steps.append(ReductionStep(
                rule=mt.group("rule"),
                deleted=tuple(int(x) for x in mt.group("deleted").split(",") if x),
                inserted_edge=tuple(map(int, ins.split(","))) if ins else None,
                contributed=_pairs(mt.group("contrib")),
                removed=_pairs(mt.group("removed")),
                m_before=int(mt.group("m0")), m_after=int(mt.group("m1")),
                b_before=int(mt.group("b0")), b_after=int(mt.group("b1"))))
        elif line.strip():
            u, v = line.split()
            edges.append(norm_edge(int(u), int(v)))
    return steps, edges
