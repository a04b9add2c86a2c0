import json
import subprocess
import sys
from importlib.resources import files

import jsonschema
import pytest

from domsub.cli import main
from domsub.generators import complete, complete_bipartite, cycle, path, star
from domsub.graph import Graph, format_edge_list, parse_edge_list
from domsub.reduction import EXAMPLE_DIMACS, complete_polarity_cnf


def schema(name):
    return json.loads(files("domsub").joinpath("schemas", f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def without_timings(report):
    return {k: v for k, v in report.items() if k != "timings"}


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(format_edge_list(g))
        return p

    return write


# --- gamma ------------------------------------------------------------------------


@pytest.mark.parametrize("g, want", [(path(7), 3), (complete(5), 1), (cycle(9), 3)])
def test_gamma(capsys, graph_file, g, want):
    code, out, _ = run(capsys, "gamma", graph_file(g))
    assert code == 0
    jsonschema.validate(out, schema("gamma"))
    assert out["gamma"] == want and len(out["witness"]) == want


def test_gamma_malformed(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n0 1\n")
    code, out, err = run(capsys, "gamma", p)
    assert code == 2 and out is None and "2 edges" in err


def test_gamma_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "gamma", tmp_path / "nope.txt")
    assert code == 2 and "cannot read" in err


# --- classify ---------------------------------------------------------------------


def test_classify_path_tree(capsys, graph_file, tmp_path):
    dot = tmp_path / "p7.dot"
    code, out, _ = run(capsys, "classify", graph_file(path(7)), "--tree", "--verify", "--dot", dot)
    assert code == 0
    jsonschema.validate(out, schema("classify"))
    assert (out["sd"], out["msd"]) == (3, 3)
    assert out["method"] == "characterization" and out["reason"] == "family-F" and out["verified"]
    assert out["labeling"] == {"0": "A", "1": "B", "2": "B", "3": "A", "4": "B", "5": "B", "6": "A"}
    assert '6 [label="6:A"];' in dot.read_text()


def test_classify_tree_without_verify(capsys, graph_file):
    code, out, _ = run(capsys, "classify", graph_file(star(3)), "--tree")
    assert code == 0
    jsonschema.validate(out, schema("classify"))
    assert out["per_edge_msd"] is None and out["labeling"] is None
    assert (out["sd"], out["msd"], out["reason"]) == (1, 1, "strong-support")


def test_classify_cycle(capsys, graph_file):
    code, out, _ = run(capsys, "classify", graph_file(cycle(5)))
    assert code == 0
    jsonschema.validate(out, schema("classify"))
    assert (out["sd"], out["msd"], out["gamma"]) == (2, 2, 2)
    assert out["method"] == "direct"
    assert len(out["per_edge_msd"]) == 5
    assert all(item["msd"] == 2 for item in out["per_edge_msd"])


def test_classify_k33(capsys, graph_file):
    code, out, _ = run(capsys, "classify", graph_file(complete_bipartite(3, 3)))
    assert code == 0
    assert (out["sd"], out["msd"]) == (2, 3)
    assert len(out["witnesses"]["sd_edges"]) == 2


def test_classify_budget_exceeded(capsys, graph_file):
    code, out, _ = run(capsys, "classify", graph_file(cycle(4)), "--budget", "2")
    assert code == 0
    jsonschema.validate(out, schema("classify"))
    assert out["sd"] == "exceeds-budget" and out["msd"] == 3 and out["witnesses"]["sd_edges"] == []


def test_classify_preconditions(capsys, graph_file):
    code, _, err = run(capsys, "classify", graph_file(Graph(4, [(0, 1), (2, 3)])))
    assert code == 3 and "not connected" in err
    code, _, _ = run(capsys, "classify", graph_file(path(2)))
    assert code == 3
    code, _, _ = run(capsys, "classify", graph_file(cycle(5)), "--tree")
    assert code == 3
    code, _, _ = run(capsys, "classify", graph_file(path(5)), "--budget", "0")
    assert code == 3


def test_report_is_deterministic_apart_from_timings(capsys, graph_file):
    p = graph_file(complete_bipartite(2, 3))
    _, first, _ = run(capsys, "classify", p)
    _, second, _ = run(capsys, "classify", p)
    assert without_timings(first) == without_timings(second)
    assert json.loads(json.dumps(first)) == first


# --- reduce -----------------------------------------------------------------------


def test_reduce_example(capsys, tmp_path):
    cnf = tmp_path / "ex.cnf"
    cnf.write_text(EXAMPLE_DIMACS)
    dot, edges = tmp_path / "ex.dot", tmp_path / "ex.txt"
    code, out, _ = run(capsys, "reduce", cnf, "--verify", "--dot", dot, "--edge-list", edges)
    assert code == 0
    jsonschema.validate(out, schema("reduce"))
    assert without_timings(out) == {
        "n": 4,
        "m": 4,
        "vertices": 30,
        "edges": 41,
        "gamma": 9,
        "satisfiable": True,
        "sd_gt_1": True,
        "gamma_x0x1_subdivided": 9,
        "pass": True,
    }
    g = parse_edge_list(edges.read_text())
    assert (g.n, g.m) == (30, 41)
    text = dot.read_text()
    assert 'label="29:x0"' in text and 'label="1:~u0"' in text


def test_reduce_without_verify(capsys, tmp_path):
    cnf = tmp_path / "ex.cnf"
    cnf.write_text(EXAMPLE_DIMACS)
    code, out, _ = run(capsys, "reduce", cnf)
    assert code == 0
    jsonschema.validate(out, schema("reduce"))
    assert out == {"n": 4, "m": 4, "vertices": 30, "edges": 41}


def test_reduce_unsatisfiable(capsys, tmp_path):
    cnf = tmp_path / "unsat.cnf"
    cnf.write_text(complete_polarity_cnf().to_dimacs())
    code, out, _ = run(capsys, "reduce", cnf, "--verify")
    assert code == 0
    jsonschema.validate(out, schema("reduce"))
    assert out["pass"] is True and out["sd_gt_1"] is False and out["satisfiable"] is False


def test_reduce_errors(capsys, tmp_path):
    cnf = tmp_path / "w2.cnf"
    cnf.write_text("p cnf 2 1\n1 2 0\n")
    assert run(capsys, "reduce", cnf)[0] == 2
    pure = tmp_path / "pure.cnf"
    pure.write_text("p cnf 3 1\n1 2 3 0\n")
    code, _, err = run(capsys, "reduce", pure)
    assert code == 3 and "pure literals" in err
    assert run(capsys, "reduce", tmp_path / "missing.cnf")[0] == 2


# --- verify-suite ------------------------------------------------------------------

SMALL = ["--max-n", "4", "--samples", "10", "--tree-max-n", "5", "--tree-samples", "10"]


def test_verify_suite_small(capsys):
    code, out, err = run(capsys, "verify-suite", *SMALL)
    assert code == 0
    jsonschema.validate(out, schema("verify_suite"))
    assert out["passed"] and out["seed"] == 0 and len(out["checks"]) == 8
    assert err.count("[PASS]") == 8


def test_verify_suite_injected_fault(capsys):
    code, out, err = run(capsys, "verify-suite", *SMALL, "--inject-fault")
    assert code == 1
    jsonschema.validate(out, schema("verify_suite"))
    failed = [c for c in out["checks"] if not c["passed"]]
    assert len(failed) == 1
    assert parse_edge_list(failed[0]["counterexample"]) == path(4)
    assert "[FAIL]" in err and "counterexample (edge list):\n4 3\n0 1\n1 2\n2 3\n" in err


# --- console script -----------------------------------------------------------------


def test_module_entry_point(tmp_path):
    p = tmp_path / "k5.txt"
    p.write_text(format_edge_list(complete(5)))
    proc = subprocess.run(
        [sys.executable, "-m", "domsub.cli", "gamma", str(p)], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["gamma"] == 1
    proc = subprocess.run([sys.executable, "-m", "domsub.cli"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and proc.stdout == ""
