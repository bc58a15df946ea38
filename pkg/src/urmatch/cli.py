"""Command-line front end: ``urm <verb> ...``.

Exit codes: 0 success, 1 negative verdict (``verify``), 2 unreadable input,
3 precondition violation (including the ``K_{3,3}`` exclusion), 4 budget
exhausted, 5 a proof step failed at runtime.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import forge
from .bridges import certify_theorem1
from .errors import BudgetExhausted, GraphFormatError, PreconditionError, ProofFalsificationError
from .experiment import (
    DEFAULT_ORACLE_MAX_M,
    dump_counterexamples,
    load_corpus,
    run_experiment,
    write_csv,
)
from .girth import certify_theorem2
from .graph import Graph, format_edge_list, parse_edge_list
from .matching import format_matching, is_acyclic_matching, is_uniquely_restricted, parse_matching
from .oracle import DEFAULT_BUDGET, MODES, solve
from .structure import bridge_report

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_FALSIFIED = 0, 1, 2, 3, 4, 5


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    try:
        return parse_edge_list(_read(path))
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    g = _graph(args.graph)
    try:
        m = parse_matching(_read(args.matching), g)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{args.matching}: {exc}") from None
    verdict = is_uniquely_restricted(g, m)
    print(f"size={len(m)}")
    print(f"uniquely_restricted={'yes' if verdict else 'no'}")
    print(f"acyclic={'yes' if is_acyclic_matching(g, m) else 'no'}")
    if verdict.witness is not None:
        print("witness=" + " ".join(map(str, verdict.witness.cycle)))
    return EXIT_OK if verdict else EXIT_NO


def cmd_solve(args) -> int:
    g = _graph(args.graph)
    try:
        res = solve(g, args.param, args.budget)
    except BudgetExhausted as exc:
        if exc.best is not None and args.out:
            _write(args.out, format_matching(exc.best.witness))
        raise
    print(f"param={args.param} optimum={res.optimum} explored={res.explored}")
    _write(args.out, format_matching(res.witness))
    return EXIT_OK


def _certify_bridges(args) -> int:
    g = _graph(args.graph)
    cert = certify_theorem1(g, strict=args.strict, budget=args.budget)
    if args.emit_trace:
        _write(args.emit_trace, cert.serialize())
    if args.out:
        _write(args.out, format_matching(cert.matching))
    target = cert.m + cert.b_good
    print(f"theorem=bridges n={cert.n} m={cert.m} good_bridges={cert.b_good} "
          f"bridges={cert.b_all}")
    print(f"achieved={cert.achieved} target={target}/6 verified={'yes' if cert.verified else 'no'}")
    for note in cert.exceptions:
        print(f"exception={note}")
    if cert.is_k33:
        print("K33_EXCEPTION: the bound does not hold for K_{3,3}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def _certify_girth(args) -> int:
    g = _graph(args.graph)
    cert = certify_theorem2(g, require_girth=not args.explore)
    if args.emit_trace:
        _write(args.emit_trace, cert.serialize())
    if args.out:
        _write(args.out, format_matching(cert.matching))
    girth = "inf" if cert.girth is None else cert.girth
    print(f"theorem=girth n={cert.n} girth={girth}")
    print(f"achieved={cert.achieved} target={cert.target} verified={'yes' if cert.verified else 'no'}")
    for note in cert.anomalies:
        print(f"anomaly={note}")
    return EXIT_OK


def cmd_certify(args) -> int:
    return _certify_bridges(args) if args.theorem == "bridges" else _certify_girth(args)


def _gen_graph(args) -> Graph:
    fam = args.family.lower()
    p = args.params

    def ints(count: int) -> list[int]:
        try:
            vals = [int(x) for x in p]
        except ValueError:
            raise PreconditionError(f"gen {args.family}: parameters must be integers") from None
        if len(vals) < count:
            raise PreconditionError(f"gen {args.family} needs {count} integer parameter(s)")
        return vals

    if fam == "fig1":
        return forge.named("FIG1")
    if fam == "named":
        if not p:
            raise PreconditionError("gen named needs a catalog id")
        return forge.named(p[0].upper())
    if args.family.upper() in forge.NAMED_IDS:
        return forge.named(args.family.upper())
    if fam == "accounting-gap":
        return forge.accounting_gap_example()
    seeded = {"random-subcubic": forge.random_subcubic,
              "random-bridged": forge.random_bridged_subcubic,
              "random-cubic": forge.random_cubic,
              "random-tree": forge.random_tree}
    if fam in seeded:
        vals = ints(1)
        return seeded[fam](vals[0], vals[1] if len(vals) > 1 else args.seed)
    if fam == "random-girth":
        vals = ints(2)
        return forge.random_subcubic_girth(vals[0], vals[1], vals[2] if len(vals) > 2 else args.seed)
    if fam == "claw-chain":
        return forge.claw_chain(ints(1)[0])
    if fam in ("tight-tree", "tight-family"):
        vals = ints(1)
        trees = forge.tight_trees(vals[0])
        if not trees:
            raise PreconditionError(f"no tight tree on {vals[0]} vertices")
        if fam == "tight-tree":
            index = vals[1] if len(vals) > 1 else len(trees) - 1
            if not -len(trees) <= index < len(trees):
                raise PreconditionError(f"only {len(trees)} tight trees on {vals[0]} vertices")
            return trees[index]
        tree = trees[-1]
        leaves = [v for v in range(tree.n) if tree.degree(v) <= 1]
        k = vals[1] if len(vals) > 1 else len(leaves)
        return forge.tight_bridge_family(tree, set(leaves[:k]))
    raise PreconditionError(f"unknown family {args.family!r}")


def cmd_gen(args) -> int:
    _write(args.out, format_edge_list(_gen_graph(args)))
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _graph(args.graph)
    rep = bridge_report(g)
    girth = g.girth()
    hist = [0, 0, 0, 0]
    for d in g.degrees():
        if d < 4:
            hist[d] += 1
    print(f"n={g.n}")
    print(f"m={g.m}")
    print(f"components={len(g.components())}")
    print(f"max_degree={g.max_degree()}")
    print("degree_counts=" + ",".join(map(str, hist)))
    print(f"subcubic={'yes' if g.is_subcubic() else 'no'}")
    print(f"cubic={'yes' if g.is_cubic() else 'no'}")
    print(f"girth={'inf' if girth is None else girth}")
    print(f"bridges={rep.b_all}")
    print(f"good_bridges={rep.b_good}")
    print(f"k33={'yes' if g.is_k33() else 'no'}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    spec, corpus = load_corpus(args.corpus)
    rows = run_experiment(corpus, oracle_max_m=int(spec.get("oracle_max_m", DEFAULT_ORACLE_MAX_M)),
                          budget=int(spec.get("budget", DEFAULT_BUDGET)), jobs=args.jobs)
    if args.out and args.out != "-":
        with open(args.out, "w", newline="\n") as fh:
            write_csv(rows, fh, args.timings)
    else:
        write_csv(rows, sys.stdout, args.timings)
    bad = [r for r in rows if r.falsified]
    errors = sum(1 for r in rows if r.error)
    print(f"instances={len(rows)} falsified={len(bad)} errors={errors}", file=sys.stderr)
    if bad:
        where = args.counterexamples or (str(args.out) + ".counterexamples" if args.out else
                                         "counterexamples")
        for path in dump_counterexamples(bad, corpus, where):
            print(f"counterexample={path}", file=sys.stderr)
        return EXIT_FALSIFIED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="urm", description="Uniquely restricted matchings in "
                                 "subcubic graphs: verifier, exact solver, bound certificates.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="check a matching for the uniquely restricted property")
    p.add_argument("graph")
    p.add_argument("matching")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact nu, nu_ur or nu_ac")
    p.add_argument("graph")
    p.add_argument("--param", choices=MODES, default="ur")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", "-o", help="write the witness matching here")
    p.set_defaults(func=cmd_solve)

    def certify_flags(p, theorem: str | None) -> None:
        p.add_argument("graph")
        p.add_argument("--emit-trace", metavar="PATH")
        p.add_argument("--out", "-o", help="write the matching here")
        p.add_argument("--strict", action="store_true",
                       help="fail on the first reduction step that misses its accounting")
        p.add_argument("--explore", action="store_true",
                       help="girth certificate on girth < 7 inputs, reporting anomalies")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        if theorem is None:
            p.add_argument("--theorem", choices=("bridges", "girth"), required=True)
            p.set_defaults(func=cmd_certify)
        else:
            p.set_defaults(func=cmd_certify, theorem=theorem)

    certify_flags(sub.add_parser("certify-bridges", help="certificate for 6|M| >= m + b_good"),
                  "bridges")
    certify_flags(sub.add_parser("certify-girth", help="certificate for 3|M| >= n - 1"), "girth")
    certify_flags(sub.add_parser("certify", help="either certificate, chosen by --theorem"), None)

    p = sub.add_parser("gen", help="generate a graph in edge-list format")
    p.add_argument("family", help="fig1, named ID, a catalog id, random-subcubic N [SEED], "
                   "random-bridged N [SEED], random-girth N G [SEED], random-cubic N [SEED], "
                   "random-tree N [SEED], tight-tree N [INDEX], claw-chain K, "
                   "tight-family N [K], accounting-gap")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="structural summary of a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("experiment", help="run a corpus spec and write a CSV report")
    p.add_argument("corpus")
    p.add_argument("--out", "-o")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="add a per-row seconds column")
    p.add_argument("--counterexamples", metavar="DIR")
    p.set_defaults(func=cmd_experiment)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ProofFalsificationError as exc:
        print(f"PROOF STEP FAILED: {exc}", file=sys.stderr)
        for step in exc.trace or []:
            line = step.to_line() if hasattr(step, "to_line") else repr(step)
            print(f"trace: {line}", file=sys.stderr)
        if exc.graph is not None:
            sys.stderr.write(format_edge_list(exc.graph))
        return EXIT_FALSIFIED


if __name__ == "__main__":
    sys.exit(main())
