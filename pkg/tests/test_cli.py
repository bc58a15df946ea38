from __future__ import annotations

import json

import pytest

from urmatch.bridges import parse_trace
from urmatch.cli import main
from urmatch.forge import accounting_gap_example, named
from urmatch.girth import parse_girth_trace
from urmatch.graph import format_edge_list, read_edge_list
from urmatch.matching import Matching, is_uniquely_restricted, parse_matching


@pytest.fixture
def files(tmp_path):
    def put(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return put


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_yes_and_no(files, capsys):
    c4 = files("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(["verify", c4, files("one.txt", "0 1\n")], capsys)
    assert code == 0 and "uniquely_restricted=yes" in out and "acyclic=yes" in out
    code, out, _ = run(["verify", c4, files("two.txt", "0 1\n2 3\n")], capsys)
    assert code == 1 and "uniquely_restricted=no" in out
    assert sorted(map(int, out.split("witness=")[1].split())) == [0, 1, 2, 3]


def test_parse_errors_exit_2(files, capsys):
    bad = files("dup.txt", "3 2\n0 1\n1 0\n")
    code, _, err = run(["stats", bad], capsys)
    assert code == 2 and "line" in err
    assert run(["stats", "/nonexistent"], capsys)[0] == 2
    path = files("p.txt", "3 2\n0 1\n1 2\n")
    code, _, _ = run(["verify", path, files("m.txt", "0 2\n")], capsys)
    assert code == 2


def test_solve_and_budget(files, capsys, tmp_path):
    fig = files("fig1.txt", format_edge_list(named("FIG1")))
    out_path = tmp_path / "m.txt"
    code, out, _ = run(["solve", fig, "--param", "ur", "--out", out_path], capsys)
    assert code == 0 and "optimum=3" in out
    g = named("FIG1")
    m = parse_matching(out_path.read_text(), g)
    assert len(m) == 3 and is_uniquely_restricted(g, m)
    code, out, _ = run(["solve", fig, "--param", "m"], capsys)
    assert code == 0 and "optimum=5" in out
    code, _, err = run(["solve", files("mc.txt", format_edge_list(named("MCGEE"))),
                        "--budget", "100"], capsys)
    assert code == 4 and "budget" in err


def test_certify_bridges_trace(files, capsys, tmp_path):
    fig = files("fig1.txt", format_edge_list(named("FIG1")))
    trace = tmp_path / "trace.txt"
    code, out, _ = run(["certify-bridges", fig, "--emit-trace", trace], capsys)
    assert code == 0 and "achieved=3 target=18/6 verified=yes" in out
    steps, edges = parse_trace(trace.read_text())
    assert steps and len(edges) == 3
    assert all(line.split()[0].isupper() or line[0].isdigit()
               for line in trace.read_text().splitlines())
    g = named("FIG1")
    assert is_uniquely_restricted(g, Matching(g, edges))
    code, out2, _ = run(["certify", "--theorem", "bridges", fig], capsys)
    assert code == 0 and out2 == out


def test_k33_exits_3(files, capsys):
    code, out, err = run(["certify-bridges", files("k33.txt", format_edge_list(named("K33")))],
                         capsys)
    assert code == 3 and "achieved=1" in out and "K33_EXCEPTION" in err


def test_preconditions_exit_3(files, capsys):
    star = files("star.txt", "5 4\n0 1\n0 2\n0 3\n0 4\n")
    assert run(["certify-bridges", star], capsys)[0] == 3
    k4 = files("k4.txt", format_edge_list(named("K4")))
    assert run(["certify-girth", k4], capsys)[0] == 3
    code, out, _ = run(["certify-girth", k4, "--explore"], capsys)
    assert code == 0 and "theorem=girth" in out
    disconnected = files("dis.txt", "4 2\n0 1\n2 3\n")
    assert run(["certify-bridges", disconnected], capsys)[0] == 3


def test_strict_gap_exits_5(files, capsys):
    gap = files("gap.txt", format_edge_list(accounting_gap_example()))
    code, out, _ = run(["certify-bridges", gap], capsys)
    assert code == 0 and "exception=ACCOUNTING_GAP" in out
    code, _, err = run(["certify-bridges", gap, "--strict"], capsys)
    assert code == 5 and "PROOF STEP FAILED" in err and "trace:" in err


def test_certify_girth(files, capsys, tmp_path):
    mc = files("mcgee.txt", format_edge_list(named("MCGEE")))
    trace = tmp_path / "t.txt"
    code, out, _ = run(["certify-girth", mc, "--emit-trace", trace], capsys)
    assert code == 0 and "girth=7" in out and "target=8" in out
    steps, edges = parse_girth_trace(trace.read_text())
    assert steps[0].rule == "CUBIC_ENDVERTEX" and 3 * len(edges) >= 24 - 1


def test_gen_and_stats(tmp_path, capsys):
    out_path = tmp_path / "g.txt"
    assert run(["gen", "random-girth", 30, 7, 5, "--out", out_path], capsys)[0] == 0
    g = read_edge_list(out_path)
    assert g.n == 30 and g.is_subcubic() and (g.girth() is None or g.girth() >= 7)
    code, first, _ = run(["gen", "random-subcubic", 12, 3], capsys)
    assert code == 0 and run(["gen", "random-subcubic", 12, "--seed", 3], capsys)[1] == first
    code, out, _ = run(["gen", "fig1"], capsys)
    assert out == format_edge_list(named("FIG1"))
    assert run(["gen", "named", "mcgee"], capsys)[1] == format_edge_list(named("MCGEE"))
    for fam in (["claw-chain", 3], ["tight-tree", 10], ["tight-family", 10, 1],
                ["random-tree", 9], ["random-bridged", 20], ["random-cubic", 10],
                ["accounting-gap"]):
        assert run(["gen", *fam], capsys)[0] == 0
    assert run(["gen", "bogus"], capsys)[0] == 3
    assert run(["gen", "random-girth", 10], capsys)[0] == 3
    code, out, _ = run(["stats", out_path], capsys)
    assert code == 0 and "n=30" in out and "subcubic=yes" in out
    code, out, _ = run(["stats", write(tmp_path / "f.txt", named("FIG1"))], capsys)
    assert "bridges=3" in out and "good_bridges=3" in out and "m=15" in out


def write(path, g) -> str:
    path.write_text(format_edge_list(g))
    return str(path)


def test_experiment_verb(tmp_path, capsys):
    spec = {"instances": [{"family": "named", "ids": ["FIG1", "K33", "C7"]},
                          {"family": "exhaustive", "n_max": 4}]}
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps(spec))
    out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
    code, _, err = run(["experiment", corpus, "--out", out_a], capsys)
    assert code == 0 and "falsified=0" in err
    assert run(["experiment", corpus, "--out", out_b, "--jobs", 2], capsys)[0] == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    assert out_a.read_text().splitlines()[0].startswith("instance,n,m,")
    code, out, _ = run(["experiment", corpus, "--timings"], capsys)
    assert out.splitlines()[0].endswith(",seconds")


def test_experiment_falsification_exit(tmp_path, capsys, monkeypatch):
    from urmatch import experiment
    from urmatch.errors import ProofFalsificationError

    def boom(g, **kwargs):
        raise ProofFalsificationError("synthetic")

    monkeypatch.setattr(experiment, "certify_theorem1", boom)
    corpus = tmp_path / "corpus.json"
    corpus.write_text(json.dumps({"instances": [{"family": "named", "ids": ["C7"]}]}))
    cx = tmp_path / "cx"
    code, _, err = run(["experiment", corpus, "--out", tmp_path / "r.csv",
                        "--counterexamples", cx], capsys)
    assert code == 5 and "falsified=1" in err
    assert read_edge_list(cx / "C7.txt") == named("C7")
