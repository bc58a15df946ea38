"""Batch experiments: corpus specs, per-instance rows and the CSV report.

A corpus spec is a JSON object::

    {"oracle_max_m": 30, "budget": 1000000,
     "instances": [
        {"family": "exhaustive", "n_max": 8},
        {"family": "random-subcubic", "n_min": 2, "n_max": 40, "count": 500, "seed": 0,
         "noncubic": true},
        {"family": "random-bridged", "n_min": 2, "n_max": 40, "count": 100, "seed": 0},
        {"family": "random-girth", "girth": 7, "n_min": 2, "n_max": 60, "count": 200, "seed": 0},
        {"family": "random-cubic", "n_min": 4, "n_max": 20, "count": 20, "seed": 0},
        {"family": "named", "ids": ["FIG1", "MCGEE"]},
        {"family": "tight-tree", "n": 10},
        {"family": "file", "path": "graph.txt"}]}

Every row re-verifies its certificates.  The conjecture column needs
``nu_ur``: it is exact when ``m <= oracle_max_m``; otherwise the best
certified or greedy matching is used as a lower bound, and the exact search
runs only if that bound does not already settle the inequality.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import IO, Iterable

from . import forge
from .bridges import certify_theorem1
from .errors import BudgetExhausted, PreconditionError, ProofFalsificationError, URMError
from .girth import certify_theorem2
from .graph import Graph, format_edge_list, read_edge_list
from .matching import is_uniquely_restricted
from .oracle import DEFAULT_BUDGET, greedy_matching, nu_ac_exact, nu_exact, nu_ur_exact
from .structure import bridge_report

DEFAULT_ORACLE_MAX_M = 30


@dataclass
class ExperimentRow:
    instance: str
    n: int
    m: int
    bridges: int
    good_bridges: int
    girth: str
    nu: int
    nu_ur: str
    nu_ur_kind: str
    nu_ac: str
    cert1_achieved: str
    cert1_target6: int
    cert1_gaps: str
    cert2_achieved: str
    cert2_target: str
    conj1_margin: str
    falsification: str
    error: str
    seconds: float = 0.0

    @classmethod
    def header(cls, timings: bool = False) -> list[str]:
        names = [f.name for f in fields(cls)]
        return names if timings else names[:-1]

    def cells(self, timings: bool = False) -> list[str]:
        out = [str(getattr(self, name)) for name in self.header(False)]
        if timings:
            out.append(f"{self.seconds:.4f}")
        return out

    @property
    def falsified(self) -> bool:
        return bool(self.falsification)


# -- corpus --------------------------------------------------------------------------------


def _span(entry: dict) -> tuple[int, int]:
    if "n" in entry:
        return int(entry["n"]), int(entry["n"])
    return int(entry.get("n_min", 2)), int(entry["n_max"])


def _sizes(entry: dict) -> Iterable[tuple[int, int]]:
    lo, hi = _span(entry)
    seed = int(entry.get("seed", 0))
    for i in range(int(entry.get("count", 1))):
        yield lo + i % (hi - lo + 1), seed + i


def build_corpus(spec: dict, base: Path | None = None) -> list[tuple[str, Graph]]:
    """Expand a corpus spec into ``(instance id, graph)`` pairs, in spec order."""
    out: list[tuple[str, Graph]] = []
    for entry in spec.get("instances", []):
        fam = entry.get("family")
        if fam == "exhaustive":
            for n in range(int(entry.get("n_min", 1)), int(entry["n_max"]) + 1):
                graphs = forge.connected_subcubic_graphs(n)
                out += [(f"exh-n{n}-{i}", g) for i, g in enumerate(graphs)]
        elif fam == "random-subcubic":
            noncubic = bool(entry.get("noncubic", False))
            for n, s in _sizes(entry):
                g = forge.random_subcubic(n, s)
                attempt = 0
                while noncubic and g.is_cubic():
                    attempt += 1
                    g = forge.random_subcubic(n, f"{s}.{attempt}")
                out.append((f"rsub-n{n}-s{s}", g))
        elif fam == "random-bridged":
            out += [(f"rbr-n{n}-s{s}", forge.random_bridged_subcubic(n, s))
                    for n, s in _sizes(entry)]
        elif fam == "random-girth":
            gg = int(entry.get("girth", 7))
            out += [(f"rg{gg}-n{n}-s{s}", forge.random_subcubic_girth(n, gg, s))
                    for n, s in _sizes(entry)]
        elif fam == "random-cubic":
            for n, s in _sizes(entry):
                n += n % 2
                out.append((f"rcub-n{n}-s{s}", forge.random_cubic(max(n, 4), s)))
        elif fam == "random-tree":
            out += [(f"rtree-n{n}-s{s}", forge.random_tree(n, s)) for n, s in _sizes(entry)]
        elif fam == "named":
            out += [(name, forge.named(name)) for name in entry.get("ids", forge.NAMED_IDS)]
        elif fam == "tight-tree":
            n = int(entry["n"])
            out += [(f"tight-n{n}-{i}", t) for i, t in enumerate(forge.tight_trees(n))]
        elif fam == "file":
            path = Path(entry["path"])
            if base is not None and not path.is_absolute():
                path = base / path
            out.append((entry.get("id", path.stem), read_edge_list(path)))
        else:
            raise PreconditionError(f"unknown corpus family {fam!r}")
    return out


def load_corpus(path: str | Path) -> tuple[dict, list[tuple[str, Graph]]]:
    path = Path(path)
    try:
        spec = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"corpus spec {path}: {exc}") from None
    return spec, build_corpus(spec, path.parent)


# -- one instance ----------------------------------------------------------------------------


def _clean(text: str) -> str:
    return text.replace(",", ";").replace("\n", " ")[:200]


def evaluate(instance: str, g: Graph, oracle_max_m: int = DEFAULT_ORACLE_MAX_M,
             budget: int = DEFAULT_BUDGET) -> ExperimentRow:
    """Compute one report row; failures are recorded in the row, never raised."""
    start = time.perf_counter()
    rep = bridge_report(g)
    girth = g.girth()
    nu = nu_exact(g).optimum
    target6 = g.m + rep.b_good
    flags: list[str] = []
    errors: list[str] = []
    row = ExperimentRow(instance, g.n, g.m, rep.b_all, rep.b_good,
                        "inf" if girth is None else str(girth), nu,
                        nu_ur="", nu_ur_kind="", nu_ac="", cert1_achieved="",
                        cert1_target6=target6, cert1_gaps="", cert2_achieved="",
                        cert2_target="", conj1_margin="", falsification="", error="")
    eligible = g.n > 0 and g.is_connected() and g.is_subcubic()

    # bound certificate with good bridges
    lower_ur = 0
    if eligible:
        try:
            cert = certify_theorem1(g, budget=budget)
            if not cert.verified or not is_uniquely_restricted(g, cert.matching):
                flags.append("cert1-unverified")
            if cert.is_k33:
                row.cert1_achieved = f"{cert.achieved}*K33"
            else:
                row.cert1_achieved = str(cert.achieved)
                if 6 * cert.achieved < target6:
                    flags.append("cert1-bound")
            row.cert1_gaps = str(sum(e.startswith("ACCOUNTING_GAP") for e in cert.exceptions))
            lower_ur = cert.achieved
        except ProofFalsificationError as exc:
            flags.append("cert1-falsified")
            errors.append(_clean(str(exc)))
        except URMError as exc:
            errors.append(_clean(f"cert1: {exc}"))

    # girth certificate
    if eligible and (girth is None or girth >= 7):
        try:
            cert2 = certify_theorem2(g)
            row.cert2_achieved = str(cert2.achieved)
            row.cert2_target = str(cert2.target)
            if 3 * cert2.achieved < g.n - 1:
                flags.append("cert2-bound")
            lower_ur = max(lower_ur, cert2.achieved)
        except ProofFalsificationError as exc:
            flags.append("cert2-falsified")
            errors.append(_clean(str(exc)))
        except URMError as exc:
            errors.append(_clean(f"cert2: {exc}"))

    # nu_ur, exactly or as a lower bound good enough for the conjecture check
    conj_need = -(-(g.m + rep.b_all) // 6)
    nu_ur = None
    try:
        if g.m <= oracle_max_m:
            res = nu_ur_exact(g, budget)
            nu_ur, kind = res.optimum, "exact"
            if lower_ur > nu_ur:
                flags.append("cert-exceeds-optimum")
            ac = nu_ac_exact(g, budget).optimum
            row.nu_ac = str(ac)
            if not ac <= nu_ur <= nu:
                flags.append("chain")
        else:
            greedy = greedy_matching(g, "ur")
            nu_ur, kind = max(lower_ur, len(greedy)), "lower"
            if nu_ur < conj_need:
                res = nu_ur_exact(g, budget, stop_at=conj_need)
                nu_ur, kind = res.optimum, ("exact" if res.optimal else "lower")
    except BudgetExhausted as exc:
        errors.append(_clean(f"oracle: {exc}"))
        if exc.best is not None:
            nu_ur, kind = max(lower_ur, exc.best.optimum), "lower"
    if nu_ur is not None:
        row.nu_ur, row.nu_ur_kind = str(nu_ur), kind
        margin = 6 * nu_ur - (g.m + rep.b_all)
        row.conj1_margin = str(margin)
        if margin < 0 and kind == "exact" and eligible and not g.is_k33():
            flags.append("conj1")
    row.falsification = ";".join(flags)
    row.error = ";".join(errors)
    row.seconds = time.perf_counter() - start
    return row


def _evaluate_packed(args) -> ExperimentRow:
    return evaluate(*args)


def run_experiment(corpus: list[tuple[str, Graph]], *, oracle_max_m: int = DEFAULT_ORACLE_MAX_M,
                   budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[ExperimentRow]:
    """Evaluate every instance; rows come back in corpus order whatever ``jobs`` is."""
    work = [(name, g, oracle_max_m, budget) for name, g in corpus]
    if jobs <= 1:
        return [_evaluate_packed(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate_packed, work, chunksize=8))


def write_csv(rows: Iterable[ExperimentRow], out: IO[str], timings: bool = False) -> None:
    out.write(",".join(ExperimentRow.header(timings)) + "\n")
    for row in rows:
        out.write(",".join(row.cells(timings)) + "\n")


def dump_counterexamples(rows: Iterable[ExperimentRow], corpus: list[tuple[str, Graph]],
                         directory: str | Path) -> list[Path]:
    """Write the edge list of every falsifying instance; returns the written paths."""
    graphs = dict(corpus)
    written = []
    for row in rows:
        if row.falsified:
            directory = Path(directory)
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / f"{row.instance}.txt"
            path.write_text(format_edge_list(graphs[row.instance]))
            written.append(path)
    return written

