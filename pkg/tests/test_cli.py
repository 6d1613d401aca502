import json
from importlib import resources

import jsonschema
import pytest

from oracles import dp_graph_nu, naive_is_shifted
from hxcomb import make_F1, make_F2, read_family, write_family
from hxcomb.cli import main


def schema(name):
    return json.loads(resources.files("hxcomb").joinpath(f"schemas/{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--n", "10", "--s", "3")
    assert code == 0
    assert out.strip() == '{"F1":36,"F2":40,"F3":35,"bound":40}'
    jsonschema.validate(json.loads(out), schema("bound"))


def test_construct_then_check(capsys, tmp_path):
    star = tmp_path / "star.json"
    code, _, _ = run(capsys, "construct", "--family", "F1", "--n", "10", "--s", "3", "-o", str(star))
    assert code == 0
    assert read_family(star) == make_F1(10, 3)
    jsonschema.validate(json.loads(star.read_text()), schema("family"))
    code, out, _ = run(capsys, "check-u", "--input", str(star), "--s", "3", "--q", "7", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_check_u_counterexample(capsys, tmp_path):
    path = tmp_path / "f2.txt"
    write_family(make_F2(10, 3), path)
    code, out, _ = run(capsys, "check-u", "--input", str(path), "--s", "3", "--q", "6", "--json")
    data = json.loads(out)
    assert code == 1
    assert data["witness"]["union_size"] == 7


@pytest.mark.parametrize("family, extra", [
    ("Apr", ["--p", "4", "--r", "2", "--k", "3"]),
    ("Agraph", ["--i", "2", "--m", "3"]),
    ("F3", ["--s", "3"]),
])
def test_construct_kinds(capsys, tmp_path, family, extra):
    out_path = tmp_path / "out.txt"
    code, out, _ = run(capsys, "construct", "--family", family, "--n", "10", *extra, "-o", str(out_path))
    assert code == 0
    assert json.loads(out)["size"] == len(read_family(out_path))


def test_construct_below_threshold_warns(capsys, tmp_path):
    code, out, err = run(capsys, "construct", "--family", "F3", "--n", "5", "--s", "2",
                         "-o", str(tmp_path / "x.json"))
    assert code == 0 and "warning" in err
    assert json.loads(out)["warning"]


def test_nu_stabilize_rstat(capsys, tmp_path):
    src = tmp_path / "g.txt"
    src.write_text("n=6 k=2\n3 4\n5 6\n2 6\n")
    code, out, _ = run(capsys, "nu", "--input", str(src), "--json")
    assert code == 0
    assert json.loads(out) == {"nu": 2, "witness": {"edges": [[3, 4], [2, 6]]}}
    dst = tmp_path / "s.json"
    code, _, _ = run(capsys, "stabilize", "--input", str(src), "-o", str(dst))
    assert code == 0
    g = read_family(dst)
    assert len(g) == 3 and naive_is_shifted(g, 6, 2)
    code, out, _ = run(capsys, "r-stat", "--input", str(dst), "--json")
    expected_nu = dp_graph_nu(g, 6)
    assert json.loads(out)["nu"] == expected_nu
    code, out, _ = run(capsys, "r-stat", "--input", str(tmp_path / "missing.json"))
    assert code == 2


def test_search_certificate(capsys, tmp_path):
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, "search", "--n", "7", "--s", "2", "--certificate", str(cert))
    assert code == 0
    data = json.loads(cert.read_text())
    assert data["optimum"] == 15
    jsonschema.validate(data, schema("certificate"))
    jsonschema.validate(data["witness"], schema("family"))


def test_search_budget_exit_3(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--n", "10", "--s", "3", "--budget-nodes", "3",
                       "--certificate", str(tmp_path / "c.json"))
    assert code == 3
    assert json.loads(out)["theorem_holds"] is None


def test_search_unrestricted_refused(capsys, tmp_path):
    code, _, err = run(capsys, "search", "--n", "7", "--s", "2", "--unrestricted",
                       "--certificate", str(tmp_path / "c.json"))
    assert code == 2 and "exceeds" in err


def test_lemmas_report(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "lemmas", "--trials", "20", "--seed", "4", "--json", "-o", str(out_path))
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("lemma_report"))
    assert {r["lemma_id"] for r in data["reports"]} == {
        "S_subgraph", "S_matching", "stable_preservation", "shadow_stable", "leq4"}
    assert data["config"]["seed"] == 4


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["search", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "nu", "--input", "/nonexistent/file.json")
    assert code == 2 and "error" in err


def test_threads_env_fallback(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HX_THREADS", "2")
    code, out, _ = run(capsys, "lemmas", "--only", "leq4", "--trials", "1", "--json")
    assert code == 0
    assert json.loads(out)["config"]["threads"] == 2
