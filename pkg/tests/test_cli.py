import json

import pytest

from propercycles.cli import run_cli
from propercycles.extremal import rainbow_complete
from propercycles.io import serialize_graph_json


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_bytes(data)
        return str(path)
    return _write


def run(argv, capsys):
    code = run_cli(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_then_oracle_is_infeasible(tmp_path, capsys):
    graph = str(tmp_path / "g.json")
    code, _, _ = run(["generate", "--family", "s1-extremal", "--n", "6", "-o", graph], capsys)
    assert code == 0
    code, out, _ = run(["oracle", graph], capsys)
    assert code == 2 and json.loads(out)["status"] == "infeasible"
    code, _, _ = run(["check", "--theorem", "s1", graph], capsys)
    assert code == 3
    code, out, _ = run(["solve", "--theorem", "s1", graph], capsys)
    assert code == 3 and json.loads(out)["status"] == "hypothesis-violation"


def test_solve_sample_and_verify(tmp_path, capsys):
    graph, result = str(tmp_path / "g.json"), str(tmp_path / "r.json")
    argv = ["generate", "--family", "sample", "--theorem", "3colgen", "--n", "6", "--c", "3", "--seed", "7", "-o", graph]
    assert run(argv, capsys)[0] == 0
    assert run(["solve", "--theorem", "3colgen", graph, "-o", result], capsys)[0] == 0
    doc = json.loads(open(result).read())
    assert doc["status"] == "found" and len(doc["certificate"]["vertices"]) == 6
    code, out, _ = run(["verify", graph, "--certificate", result], capsys)
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_rejects_bad_certificate(write, capsys):
    graph = write("g.json", serialize_graph_json(rainbow_complete(4, 2)))
    cert = write("c.json", b'{"vertices":[0,1,2,3],"edge_colors":[1,1,2,2]}')
    code, out, _ = run(["verify", graph, "--certificate", cert], capsys)
    assert code == 2 and json.loads(out)["ok"] is False


def test_usage_errors(write, capsys):
    assert run(["solve", "--bogus"], capsys)[0] == 1
    assert run(["generate", "--family", "s1-extremal", "--n", "6", "--seed", "-1"], capsys)[0] == 1
    bad = write("bad.json", b'{"n":2,"c":1,"edges":[[0,1,0]]}')
    code, _, err = run(["oracle", bad], capsys)
    assert code == 1 and "color 0" in err


def test_timeout_exit(write, capsys):
    graph = write("g.json", serialize_graph_json(rainbow_complete(10, 3)))
    code, out, _ = run(["oracle", graph, "--budget-nodes", "1"], capsys)
    assert code == 4 and json.loads(out)["status"] == "timeout"


def test_oracle_path_and_formats(write, capsys):
    graph = write("g.json", serialize_graph_json(rainbow_complete(4, 2)))
    code, out, _ = run(["oracle", graph, "--path", "--L", "3"], capsys)
    assert code == 0 and json.loads(out)["certificate"]["kind"] == "path"
    code, out, _ = run(["oracle", graph, "--format", "dot"], capsys)
    assert code == 0 and out.startswith("graph G {") and out.count("penwidth=3") == 4
    code, out, _ = run(["oracle", graph, "--format", "table"], capsys)
    assert code == 0 and out.startswith("status: found")


def test_generate_is_canonical(capsys):
    code, out, _ = run(["generate", "--family", "rainbow-complete", "--n", "3", "--c", "2"], capsys)
    assert code == 0
    assert out == '{"n":3,"c":2,"edges":[[0,1,1],[0,1,2],[0,2,1],[0,2,2],[1,2,1],[1,2,2]]}\n'


def test_sweeps(capsys):
    code, out, _ = run(["sweep", "--kind", "corpus", "--theorem", "s1", "--n", "6", "7", "--samples", "3"], capsys)
    assert code == 0 and json.loads(out)["aggregate"]["passed"] is True
    code, out, _ = run(["sweep", "--kind", "tightness", "--family", "s1-extremal", "--n", "4", "6"], capsys)
    assert code == 0
    assert run(["sweep", "--kind", "conjecture", "--n", "8", "--c", "3", "--samples", "1"], capsys)[0] == 1
    code, _, _ = run(["sweep", "--kind", "conjecture", "--n", "8", "--c", "3", "--samples", "1", "--allow-small"], capsys)
    assert code == 0
    code, out, _ = run(["sweep", "--kind", "corpus", "--theorem", "s1", "--n", "6", "--samples", "2", "--format", "table"], capsys)
    assert code == 0 and "agreement" in out
