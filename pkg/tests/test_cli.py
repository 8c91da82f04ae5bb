import json

import pytest

from hyperdom.cli import main
from hyperdom.hypergraph import Hypergraph


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_construct_and_solve(tmp_path, capsys):
    path = tmp_path / "design.txt"
    code, _ = run(capsys, "construct", "--family", "projective", "--q", "2", "--d", "2",
                  "--t", "2", "-o", str(path))
    assert code == 0
    h = Hypergraph.from_text(path.read_text())
    assert (h.n, h.m) == (9, 3) and h.labels[8] == "b_3"
    code, out = run(capsys, "solve", str(path))
    assert code == 0 and json.loads(out)["value"] == 2
    code, out = run(capsys, "solve", str(path), "--oracle", "--variant", "sdom", "--param", "2")
    assert json.loads(out)["value"] == 3


@pytest.mark.parametrize("family,flags", [
    ("disjoint", ["--k", "3", "--gamma", "2"]),
    ("padded", ["--k", "11", "--gamma", "2"]),
    ("cycle", ["--k", "3", "--gamma", "2", "--l", "2"]),
    ("spider", ["--k", "3", "--gamma", "3", "--l", "2"]),
])
def test_construct_families(capsys, family, flags):
    code, out = run(capsys, "construct", "--family", family, *flags, "--format", "json")
    assert code == 0
    assert Hypergraph.from_json(out).n > 0


def test_dominate(tmp_path, capsys):
    path = tmp_path / "c1.txt"
    run(capsys, "construct", "--family", "cycle", "--k", "3", "--gamma", "2", "--l", "2",
        "-o", str(path))
    code, out = run(capsys, "dominate", str(path), "--l", "2")
    data = json.loads(out)
    assert code == 0
    assert set(data) >= {"matching", "aux_edges", "witness", "size", "bound"}
    assert data["size"] <= 3


def test_dominate_rejects_disconnected(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text(Hypergraph(4, [[0, 1], [2, 3]]).to_text())
    assert main(["dominate", str(path), "--l", "2"]) == 2


def test_radius(capsys):
    code, out = run(capsys, "radius", "--tree", "spider:2,2,2", "--j", "2")
    data = json.loads(out)
    assert data["exact"]["exc"] == 2 and data["constructive"]["exc"] <= data["ceil_bound"]
    code, out = run(capsys, "radius", "--table", "6", "--j", "2")
    assert out.splitlines()[0].startswith("n\tj\tr_j")


def test_search_and_bounds(capsys):
    code, out = run(capsys, "search", "--k", "2", "--gamma", "2")
    assert json.loads(out)["n_min"] == 4
    code, out = run(capsys, "search", "--k", "3", "--gamma", "2", "--variant", "dist",
                    "--param", "2", "--all-witnesses")
    assert len(json.loads(out)["extremal_witnesses"]) == 1
    code, out = run(capsys, "bounds", "--k", "3", "--gamma", "3", "--format", "json")
    rows = {b["name"]: b for b in json.loads(out)["bounds"]}
    assert rows["spider_construction_size"]["upper"] == "12"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2
    assert main(["construct", "--family", "cycle", "--k", "3"]) == 2
    assert main(["solve", "/nonexistent/file"]) == 2


def test_verify_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--only", "2", "3", "--json", str(a)]) == 0
    assert main(["verify", "--only", "2", "3", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["passed"] and [c["id"] for c in report["checks"]] == [2, 3]
