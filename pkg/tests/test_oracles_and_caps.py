import json
import random

import pytest

from commgraph.cli import main
from commgraph.embeddings import LazyOracle, MaterializationCapExceeded
from commgraph.experiments import PublicView
from commgraph.graph import Degree, ExplicitOracle

from helpers import random_instance


def test_lazy_oracle_counts_queries():
    inst = random_instance("triangle", 3)
    oracle = LazyOracle(inst, random.Random(0))
    for v in range(5):
        oracle.answer(Degree(v))
    assert oracle.queries_made == 5
    assert oracle.n == inst.n
    assert oracle.supported == inst.supported


def test_explicit_oracle_counts_queries():
    inst = random_instance("triangle", 3)
    oracle = ExplicitOracle(inst.materialize(), random.Random(0))
    oracle.answer(Degree(0))
    oracle.answer(Degree(1))
    assert oracle.queries_made == 2


def test_public_view_hides_inputs():
    inst = random_instance("clique-hiding", 9)
    view = PublicView.of(inst)
    blob = json.dumps(view.params)
    assert not hasattr(view, "pp")
    assert "\"x\"" not in blob and "\"y\"" not in blob


def test_materialization_cap_env(tmp_path, monkeypatch):
    monkeypatch.setenv("COMMGRAPH_MAX_VERTICES", "10")
    inst = random_instance("connectivity", 0)
    assert inst.n > 10
    with pytest.raises(MaterializationCapExceeded):
        inst.materialize()


def test_cli_gen_skips_edges_above_cap(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("COMMGRAPH_MAX_VERTICES", "10")
    out = tmp_path / "big.json"
    code = main([
        "gen", "--kind", "triangle", "--l", "4", "--k", "2", "--seed", "7",
        "--out", str(out),
    ])
    assert code == 0  # the JSON is still written; the edge list is refused
    assert out.exists()
    assert not (tmp_path / "big.edges").exists()
    assert "skipped" in capsys.readouterr().err


def test_cli_verify_refuses_above_cap(tmp_path, monkeypatch):
    out = tmp_path / "x.json"
    assert main([
        "gen", "--kind", "triangle", "--l", "4", "--k", "2", "--seed", "7",
        "--out", str(out),
    ]) == 0
    monkeypatch.setenv("COMMGRAPH_MAX_VERTICES", "10")
    assert main(["verify", "--instance", str(out)]) == 2
