import json
import subprocess
import sys
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ume import serialize
from ume.cli import main
from ume.generators import random_edge_instance, random_node_instance
from ume.graphs import complete_graph, edgeless_graph, write_graph
from ume.interdiction import Budget
from ume.reduction import reduce_pvc

from conftest import fixture_path


@given(st.integers(min_value=3, max_value=7), st.integers(min_value=0, max_value=500),
       st.booleans())
@settings(max_examples=30)
def test_instance_roundtrip_is_value_identical(n, seed, edge_mode):
    inst = random_edge_instance(n, seed) if edge_mode else random_node_instance(n, seed)
    doc = serialize.instance_to_document(inst)
    back = serialize.document_to_instance(json.loads(serialize.dumps_canonical(doc)))
    assert back.graph == inst.graph
    assert back.evaders == inst.evaders
    assert back.efficiency == inst.efficiency
    assert back.budget == inst.budget
    assert back.mode == inst.mode
    # canonical form is a fixpoint
    assert serialize.dumps_canonical(serialize.instance_to_document(back)) == (
        serialize.dumps_canonical(doc)
    )


def test_loader_rejects_invalid_chain(tmp_path):
    inst = random_node_instance(4, 0)
    doc = serialize.instance_to_document(inst)
    doc["evaders"][0]["source"] = [[0, "0.4"]]  # no longer sums to one
    path = tmp_path / "broken.json"
    path.write_text(serialize.dumps_canonical(doc))
    with pytest.raises(ValueError, match="evader 0"):
        serialize.load_instance(path)


def test_loader_rejects_unknown_version():
    with pytest.raises(ValueError, match="version"):
        serialize.document_to_instance({"version": "nope/9"})


def test_plan_document_roundtrip():
    art = reduce_pvc(complete_graph(3), 2)
    inst = art.instance
    plan = inst.node_plan({0, 2})
    doc = serialize.plan_to_document(plan)
    back = serialize.document_to_plan(doc, inst)
    assert back.node_set == plan.node_set
    assert back.sensors == plan.sensors


def run_cli(*args):
    return main([str(a) for a in args])


def test_cli_full_pipeline(tmp_path, capsys):
    graph = fixture_path("k3")
    inst = tmp_path / "inst.json"
    witness = tmp_path / "witness.json"
    art = tmp_path / "artifacts.json"
    report = tmp_path / "report.json"

    assert run_cli("reduce", graph, "--budget", 2, "-o", inst, "--artifacts", art) == 0
    capsys.readouterr()

    assert run_cli("eval", inst) == 0
    out = capsys.readouterr().out
    assert "J_expected 0.000000000000" in out

    assert run_cli("decide", inst, "-o", witness) == 0
    assert capsys.readouterr().out.strip() == "YES"

    assert run_cli("decide", inst, "--budget", 1) == 1
    assert capsys.readouterr().out.strip() == "NO"

    assert run_cli("eval", inst, "--plan", witness) == 0
    out = capsys.readouterr().out
    assert "J_expected 1.000000000000" in out

    assert run_cli("solve", inst, "--method", "greedy") == 0
    out = capsys.readouterr().out
    assert "value 1.000000000000" in out

    assert run_cli("verify", graph, "--budgets", "0..3", "-o", report) == 0
    out = capsys.readouterr().out
    assert "PASS" in out

    report_doc = json.loads(report.read_text())
    assert report_doc["pass"] is True
    assert [row["budget"] for row in report_doc["rows"]] == [0, 1, 2, 3]
    assert report_doc["min_cover_size"] == 2

    # pipeline answers agree with the verify sweep
    rows = {row["budget"]: row["ume"] for row in report_doc["rows"]}
    assert rows[2] is True and rows[1] is False

    art_doc = json.loads(art.read_text())
    assert art_doc["coloring"][0] in ("white", "red", "green", "black")
    assert len(art_doc["edge_traversal"]) == 3
    assert all(entry[2] for entry in art_doc["edge_traversal"])


def test_cli_simulate_matches_eval(tmp_path, capsys):
    inst_path = tmp_path / "inst.json"
    art = reduce_pvc(complete_graph(3), 2)
    serialize.dump_instance(art.instance, inst_path)
    assert run_cli("simulate", inst_path, "--samples", 2000, "--seed", 3) == 0
    out = capsys.readouterr().out
    assert "J_expected 0.000000000000" in out


def test_cli_color_lines(capsys):
    assert run_cli("color", fixture_path("k4")) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert len({line.split()[1] for line in lines}) == 4


def test_cli_error_exit_code(tmp_path, capsys):
    missing = tmp_path / "missing.txt"
    assert run_cli("color", missing) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 5\n")
    assert run_cli("color", bad) == 2
    err = capsys.readouterr().err
    assert "error [graphs]" in err


def test_cli_reduce_determinism(tmp_path):
    graph = fixture_path("tri10")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli("reduce", graph, "--budget", 4, "-o", a) == 0
    assert run_cli("reduce", graph, "--budget", 4, "-o", b) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_verify_determinism(tmp_path):
    graph = fixture_path("star5")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli("verify", graph, "--budgets", "0..6", "-o", a) == 0
    assert run_cli("verify", graph, "--budgets", "0..6", "-o", b) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("name", ["k3", "star5", "singles3", "path5"])
def test_reduce_decide_pipeline_agrees_with_verify(name, tmp_path, capsys):
    graph = fixture_path(name)
    report_path = tmp_path / "report.json"
    assert run_cli("verify", graph, "--budgets", "0..4", "-o", report_path) == 0
    capsys.readouterr()
    rows = {r["budget"]: r["ume"] for r in json.loads(report_path.read_text())["rows"]}
    inst_path = tmp_path / "inst.json"
    for budget, expected_yes in rows.items():
        assert run_cli("reduce", graph, "--budget", budget, "-o", inst_path) == 0
        code = run_cli("decide", inst_path)
        capsys.readouterr()
        assert code == (0 if expected_yes else 1), (name, budget)


def test_cli_pathological_reduce(tmp_path, capsys):
    graph = tmp_path / "singles.txt"
    write_graph(edgeless_graph(3), graph)
    inst = tmp_path / "inst.json"
    assert run_cli("reduce", graph, "--budget", 0, "-o", inst) == 0
    loaded = serialize.load_instance(inst)
    assert len(loaded.evaders) == 2
    for chain in loaded.evaders:
        assert chain.source[0] == 1.0
        assert not chain.transition.any()
    assert run_cli("decide", inst) == 0
    assert capsys.readouterr().out.strip() == "YES"


def test_committed_samples_load_and_evaluate():
    import pathlib

    samples = pathlib.Path(__file__).parents[1] / "data" / "samples"
    inst = serialize.load_instance(samples / "k3_instance.json")
    plan = serialize.document_to_plan(
        serialize.load_json(samples / "k3_cover_plan.json"), inst
    )
    assert inst.objective(plan) == pytest.approx(1.0, abs=1e-12)
    assert inst.objective(inst.empty_plan()) == pytest.approx(0.0, abs=1e-12)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ume", "color", str(fixture_path("k3"))],
        capture_output=True,
        text=True,
        env={"PYTHONPATH": str(fixture_path("k3").parents[3] / "src")},
    )
    assert proc.returncode == 0
    assert len(proc.stdout.strip().splitlines()) == 3
