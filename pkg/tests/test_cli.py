import json

from click.testing import CliRunner

from pmhgraph.cli import main
from pmhgraph.cycles import closed, validate_walk
from pmhgraph.graph_core import make_named_graph, parse_graph6, write_graph6
from pmhgraph.line_graph import build_line_graph
from pmhgraph.matching import enumerate_perfect_matchings


def run(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def g6(name, params=()):
    return write_graph6(make_named_graph(name, list(params)))


def reports(result):
    return [json.loads(line) for line in result.output.strip().splitlines()]


def test_gen():
    res = run("gen", "complete", "4")
    assert res.exit_code == 0 and res.output.strip() == "C~"
    assert run("gen", "nope").exit_code == 1


def test_lg_report():
    res = run("lg", "-", input=g6("complete", [4]) + "\n")
    assert res.exit_code == 0
    (rep,) = reports(res)
    assert rep["schema"] == 1 and rep["command"] == "lg"
    assert rep["verdict"]["order"] == 6 and rep["verdict"]["size"] == 12
    lg = parse_graph6(rep["verdict"]["lg_graph6"])
    assert lg.n == 6
    assert len(rep["witness"]["vertex_edges"]) == 6


def test_pm_enum():
    res = run("pm-enum", "-", input=g6("cycle", [6]) + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["count"] == 2
    assert len(rep["witness"]["matchings"]) == 2
    res = run("pm-enum", "--count-only", "-", input=g6("cycle", [6]) + "\n")
    (rep,) = reports(res)
    assert rep["witness"] is None


def test_cycles_ham_and_witness_revalidates():
    res = run("cycles", "ham", "-", input=g6("cube") + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["outcome"] == "found"
    walk = closed(rep["witness"]["vertices"][:-1],
                  kinds=set(rep["witness"]["kinds"]))
    assert validate_walk(make_named_graph("cube", []), walk)


def test_cycles_ham_budget_exit_code():
    res = run("cycles", "ham", "--max-nodes", "3", "-",
              input=g6("petersen") + "\n")
    assert res.exit_code == 2
    (rep,) = reports(res)
    assert rep["verdict"]["outcome"] == "inconclusive"


def test_cycles_subcommands():
    res = run("cycles", "euler", "-", input=g6("octahedron") + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["outcome"] == "found"
    res = run("cycles", "circ", "-", input=g6("petersen") + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["circumference"] == 9
    res = run("cycles", "hypoham", "-", input=g6("petersen") + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["hypohamiltonian"] is True
    res = run("cycles", "arbtrace", "--from", "2", "-",
              input=g6("bowtie") + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["arbitrarily_traceable"] is True
    res = run("cycles", "domcycle", "--allow", "0", "-",
              input=g6("petersen") + "\n")
    (rep,) = reports(res)
    assert rep["verdict"]["outcome"] == "found"


def test_pmh_check_exit_codes():
    res = run("pmh-check", "-", input=g6("petersen") + "\n")
    assert res.exit_code == 0
    (rep,) = reports(res)
    assert rep["verdict"]["status"] == "not_pmh"
    assert rep["witness"]["matching"]
    res = run("pmh-check", "--max-nodes", "3", "-", input=g6("petersen") + "\n")
    assert res.exit_code == 2


def test_format_error_exit_code():
    res = run("cycles", "ham", "-", input="!!notgraph6\n")
    assert res.exit_code == 1


def test_extend_and_kotzig(tmp_path):
    lgm = build_line_graph(make_named_graph("complete", [4]))
    m = next(enumerate_perfect_matchings(lgm.lg))
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps({"edges": [list(e) for e in m.edges]}))
    for method in ("subcubic", "complete"):
        res = run("extend", "--method", method, "--matching", str(mfile),
                  "-", input=g6("complete", [4]) + "\n")
        assert res.exit_code == 0, res.output
        (rep,) = reports(res)
        assert rep["verdict"]["outcome"] == "found"
        walk = closed(rep["witness"]["vertices"][:-1],
                      kinds=set(rep["witness"]["kinds"]))
        assert validate_walk(lgm.lg, walk)
        assert walk.contains_edges(m.edges)
    res = run("kotzig", "--matching", str(mfile), "-",
              input=g6("complete", [4]) + "\n")
    assert res.exit_code == 0
    (rep,) = reports(res)
    assert rep["witness"]["containing"] and rep["witness"]["complement"]


def test_extend_parity_error(tmp_path):
    # a perfect matching request on K6: the line graph has odd order
    lgm6 = build_line_graph(make_named_graph("complete", [6]))
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps({"edges": []}))
    res = run("extend", "--method", "complete", "--matching", str(mfile),
              "-", input=g6("complete", [6]) + "\n")
    assert res.exit_code == 1


def test_construct_commands():
    res = run("construct", "yext", "--at", "0", "-", input=g6("petersen") + "\n")
    (rep,) = reports(res)
    out = parse_graph6(rep["verdict"]["graph6"])
    assert out.n == 12 and rep["witness"]["new_vertices"] == [0, 10, 11]
    res = run("construct", "yred", "--triangle",
              ",".join(map(str, rep["witness"]["new_vertices"])),
              "-", input=rep["verdict"]["graph6"] + "\n")
    (rep2,) = reports(res)
    assert parse_graph6(rep2["verdict"]["graph6"]).n == 10
    res = run("construct", "prop6", "--keep", "0", "-",
              input=g6("petersen") + "\n")
    (rep3,) = reports(res)
    assert rep3["verdict"]["order"] == 28 and rep3["verdict"]["size"] == 42


def test_survey_resumable(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("\n".join([g6("octahedron"), g6("complete", [4]),
                                 g6("cube"), "!!bad"]) + "\n")
    journal = tmp_path / "journal.jsonl"
    res = run("survey", str(corpus), "--problem", "p2",
              "--journal", str(journal))
    assert res.exit_code == 0
    summary = json.loads(res.output.strip().splitlines()[-1])
    assert summary["tested"] == 1 and summary["warnings"] == 1
    assert summary["candidates"] == []
    first_journal = journal.read_text()
    res2 = run("survey", str(corpus), "--problem", "p2",
               "--journal", str(journal))
    summary2 = json.loads(res2.output.strip().splitlines()[-1])
    assert summary2 == summary
    assert journal.read_text() == first_journal  # no duplicate oracle work


def test_survey_filters(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("\n".join([g6("complete", [4]), g6("cube"),
                                 g6("prism")]) + "\n")
    journal = tmp_path / "journal.jsonl"
    res = run("survey", str(corpus), "--problem", "p1",
              "--journal", str(journal))
    summary = json.loads(res.output.strip().splitlines()[-1])
    assert summary["tested"] == 0 and summary["filtered_out"] == 3
