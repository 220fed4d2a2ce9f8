# test_cli.py
import json

import pytest

from sasgames.data import example_path
from sasgames.main import run

COBUCHI_GAME = """spg 1;
vertex 0 owner=p1 p1=1 p2=0 succ=0,1;
vertex 1 owner=p1 p1=0 p2=2 succ=1;
"""


def invoke(capsys, *args):
    code = run([str(a) for a in args])
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def fig1_file():
    return example_path("fig1.spg")


# 1. solve
def test_solve_fig1(capsys, fig1_file):
    code, out = invoke(capsys, "solve", fig1_file, "--vertex", 0)
    assert code == 0
    document = json.loads(out)
    assert document["winning"] == [0, 1, 2, 3]
    assert document["losing"] == []
    assert "trace_digest" in document


def test_solve_losing_vertex(capsys):
    path = example_path("omega1-all-odd.spg")
    code, out = invoke(capsys, "solve", path)
    assert code == 0
    assert json.loads(out)["winning"] == []
    code, _ = invoke(capsys, "solve", path, "--vertex", 0)
    assert code == 1


def test_solve_is_byte_identical(capsys, fig1_file):
    _, first = invoke(capsys, "solve", fig1_file)
    _, again = invoke(capsys, "solve", fig1_file)
    assert first == again


@pytest.mark.parametrize("objective, winning", [("as", [0, 1, 2, 3]), ("sure", [0, 1, 2, 3])])
def test_solve_other_objectives(capsys, fig1_file, objective, winning):
    code, out = invoke(capsys, "solve", fig1_file, "--objective", objective)
    assert code == 0
    assert json.loads(out)["winning"] == winning


def test_solve_writes_trace(capsys, fig1_file, tmp_path):
    trace = tmp_path / "trace.json"
    code, _ = invoke(capsys, "solve", fig1_file, "--trace", trace)
    assert code == 0
    assert json.loads(trace.read_text())["trace"]["kind"] == "even"


# 2. Input and usage errors
def test_unknown_command(capsys):
    assert run(["frobnicate"]) == 2


def test_missing_file(capsys, tmp_path):
    assert run(["solve", str(tmp_path / "nope.spg")]) == 3


def test_malformed_game(capsys, tmp_path):
    path = tmp_path / "bad.spg"
    path.write_text("spg 1;\nvertex 0 owner=p1 p1=0 p2=0 succ=4;\n")
    assert run(["solve", str(path)]) == 3
    assert "dangling" in capsys.readouterr().err


def test_bad_override(capsys, fig1_file):
    assert run(["--set", "oracle.max_states=0", "solve", fig1_file]) == 3


# 3. gen and product
def test_gen_is_seeded(capsys):
    _, first = invoke(capsys, "gen", "--seed", 3)
    _, again = invoke(capsys, "gen", "--seed", 3)
    assert first == again
    assert first.startswith("spg 1;")
    assert run(["gen", "--seed", "-1"]) == 2


def test_gen_automaton(capsys):
    code, out = invoke(capsys, "gen", "--kind", "d2pw", "--seed", 1, "--n", 3)
    assert code == 0
    assert out.startswith("d2pw")


def test_product_then_equivalence(capsys, tmp_path):
    dpw = tmp_path / "example.dpw"
    d2pw = example_path("example.d2pw")
    assert run(["product", d2pw, "-o", str(dpw)]) == 0
    code, out = invoke(capsys, "oracle", "dpw-equiv", d2pw, dpw)
    assert code == 0
    assert json.loads(out)["verdict"] == "equal"


# 4. Certificates
def test_certify_and_verify(capsys, tmp_path, fig1_file):
    cert = tmp_path / "fig1.cert.json"
    assert run(["certify", fig1_file, "-o", str(cert)]) == 0
    code, out = invoke(capsys, "verify-cert", fig1_file, cert)
    assert code == 0
    assert json.loads(out)["accepted"] is True
    code, out = invoke(capsys, "verify-cert", example_path("fig5.spg"), cert)
    assert code == 1
    assert "another game" in json.loads(out)["diagnostic"]


def test_verify_malformed_certificate(capsys, tmp_path, fig1_file):
    cert = tmp_path / "bad.json"
    cert.write_text("[]")
    assert run(["verify-cert", fig1_file, str(cert)]) == 2


# 5. Strategies
def test_synth_then_simulate(capsys, tmp_path, fig1_file):
    strategy = tmp_path / "fig1.strategy.json"
    assert run(["synth", fig1_file, "-o", str(strategy), "--schedule", "table:3"]) == 0
    assert json.loads(strategy.read_text())["kind"] == "counter"
    code, out = invoke(
        capsys, "simulate", fig1_file, "--strategy", strategy, "--steps", 200, "--runs", 3, "--seed", 1
    )
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["runs"] == 3
    assert report["start"] == 0


def test_simulate_is_reproducible(capsys, fig1_file):
    args = ("simulate", fig1_file, "--steps", 100, "--seed", 9)
    _, first = invoke(capsys, *args)
    _, again = invoke(capsys, *args)
    assert first == again


def test_synth_precondition(capsys, fig1_file):
    assert run(["synth", "--kind", "cobuchi", fig1_file]) == 3


def test_cobuchi_strategy_checks(capsys, tmp_path):
    game = tmp_path / "cobuchi.spg"
    game.write_text(COBUCHI_GAME)
    strategy = tmp_path / "cobuchi.json"
    assert run(["synth", "--kind", "cobuchi", str(game), "-o", str(strategy)]) == 0
    code, out = invoke(capsys, "oracle", "check-strategy", game, strategy)
    assert code == 0
    assert json.loads(out)["accepted"] is True


def test_spoiling_strategy(capsys):
    code, out = invoke(capsys, "synth", "--kind", "spoiling", example_path("fig5.spg"))
    assert code == 0
    document = json.loads(out)
    assert document["player"] == 2
    assert document["moves"] == {"0": 0, "4": 4}


# 6. Oracles and rendering
def test_oracle_sas_region(capsys):
    code, out = invoke(capsys, "oracle", "sas-region", example_path("fig5.spg"))
    assert code == 0
    document = json.loads(out)
    assert document["agree"] is True
    assert document["solver"] == [2, 3]


def test_export_dot(capsys, fig1_file):
    code, out = invoke(capsys, "export-dot", fig1_file, "--regions")
    assert code == 0
    assert "digraph" in out
    assert "palegreen" in out
