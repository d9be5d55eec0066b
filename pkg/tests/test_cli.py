import json
import subprocess
import sys

import pytest

from tatforge.cli import main
from tatforge.labeling import read_labeling
from tatforge.schemes import ladder_labeling
from tatforge.verifier import full_report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_ladder(tmp_path, capsys):
    path = tmp_path / "l3.json"
    code, out, _ = run(capsys, "generate", "ladder", "3", "--out", str(path))
    assert code == 0
    assert "LAD-RUNG-RANGE" in out and "verdict: TAT" in out
    g, lab, meta = read_labeling(path)
    res = ladder_labeling(3)
    assert (g, lab) == (res.graph, res.labeling)
    assert meta["repairs"] == ["LAD-RUNG-RANGE"]


def test_generate_petersen_finding(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "petersen", "6", "2", "--out", str(tmp_path / "p.json"))
    assert code == 1
    assert "VAT FAIL (v_2,v_5)" in out


def test_generate_prism(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "prism", "3", "--out", str(tmp_path / "p.json"))
    assert code == 0 and "PRI-RUNG-INDEX" in out


def test_generate_bad_params(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "petersen", "6", "3", "--out", str(tmp_path / "x.json"))
    assert code == 2 and "error" in err
    with pytest.raises(SystemExit) as exc:
        main(["generate", "wheel", "5"])
    assert exc.value.code == 2


def test_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "l5.json"
    run(capsys, "generate", "ladder", "5", "--out", str(path))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == 0
    res = ladder_labeling(5)
    assert json.loads(out) == full_report(res.graph, res.labeling).to_dict()


def test_verify_duplicate_label(tmp_path, capsys):
    path = tmp_path / "l3.json"
    run(capsys, "generate", "ladder", "3", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["vertex_labels"][1] = doc["vertex_labels"][0]
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert "is_bijective_total: no" in out
    # u_2 now carries label 1, so wt(u_1u_2) = 1+1+10 = 12 = wt(u_1v_1) = 1+4+7
    assert "is_eat: no" in out and "is_vat: yes" in out
    assert "eat: (u_1u_2,u_1v_1) 12" in out
    assert code == 1


def test_verify_truncated(tmp_path, capsys):
    path = tmp_path / "l3.json"
    run(capsys, "generate", "ladder", "3", "--out", str(path))
    path.write_text(path.read_text()[:80])
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2 and "line" in err


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "/nonexistent/file.json")
    assert code == 2


def test_verify_partitions(tmp_path, capsys):
    path = tmp_path / "l4.json"
    run(capsys, "generate", "ladder", "4", "--out", str(path))
    code, out, _ = run(capsys, "verify", str(path), "--partition", "singletons", "--json")
    assert json.loads(out)["weak_ordered"] is True
    code, out, _ = run(capsys, "verify", str(path), "--partition", "none", "--json")
    assert json.loads(out)["weak_ordered"] is None
    code, _, _ = run(capsys, "verify", str(path), "--partition", "bogus")
    assert code == 2


def test_sweep_ladder(capsys):
    code, out, _ = run(capsys, "sweep", "ladder", "2", "12")
    lines = out.strip().splitlines()
    assert lines[0] == "family,n,m,super,eat,vat,tat,weak_ordered,repairs"
    rows = [line.split(",") for line in lines[1:]]
    assert [r[1] for r in rows] == [str(n) for n in range(2, 13)]
    assert all(r[3] == "yes" and r[7] == "yes" for r in rows)
    assert {r[1] for r in rows if r[6] == "no"} == {"11"}
    assert code == 1


def test_sweep_petersen_findings(capsys):
    code, out, _ = run(capsys, "sweep", "petersen", "3", "12", "--workers", "2")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    failing = {(int(r[1]), int(r[2])) for r in rows if r[6] == "no"}
    assert failing == {(n, m) for n in range(6, 13, 2) for m in range(2, (n - 1) // 2 + 1)}
    assert code == 1


def test_sweep_empty_range(capsys):
    code, out, _ = run(capsys, "sweep", "prism", "9", "3")
    assert out == "family,n,m,super,eat,vat,tat,weak_ordered,repairs\n"
    assert code == 0


def test_export_dot(tmp_path, capsys):
    path = tmp_path / "l2.json"
    run(capsys, "generate", "ladder", "2", "--out", str(path))
    code, out, _ = run(capsys, "export-dot", str(path))
    assert code == 0
    assert out.count(" -- ") == 4
    assert sum(1 for line in out.splitlines() if "[label=" in line and "--" not in line) == 4
    prism = tmp_path / "p3.json"
    run(capsys, "generate", "prism", "3", "--out", str(prism))
    _, out, _ = run(capsys, "export-dot", str(prism))
    assert '"u_1" -- "v_1" [label="12"];' in out
    edges = tmp_path / "g.txt"
    edges.write_text("1 2\n2 3\n")
    _, out, _ = run(capsys, "export-dot", str(edges))
    assert "label" not in out and '"1" -- "2";' in out
    edges.write_text("1 2 3\n")
    code, _, _ = run(capsys, "export-dot", str(edges))
    assert code == 2


def test_search_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "--family", "cycle", "3", "--super", "--out", str(tmp_path / "c.json"))
    assert code == 0 and "status: Found" in out
    g, lab, _ = read_labeling(tmp_path / "c.json")
    assert full_report(g, lab).is_tat
    code, out, _ = run(capsys, "search", "--family", "petersen", "5", "2", "--budget", "10")
    assert code == 3 and "BudgetExceeded" in out
    edges = tmp_path / "g.txt"
    edges.write_text("1 2\n1 3\n1 4\n")
    code, out, _ = run(capsys, "search", str(edges))
    assert code == 0 and '"format"' in out
    code, _, _ = run(capsys, "search")
    assert code == 2


def test_search_env_budget(monkeypatch, capsys):
    monkeypatch.setenv("TATFORGE_BUDGET", "10")
    code, out, _ = run(capsys, "search", "--family", "petersen", "5", "2")
    assert code == 3


def test_chain_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "chain", "--paths", "3", "3", "--out", str(tmp_path / "c.json"))
    assert code == 0 and "verdict: TAT" in out
    assert "block 2: vertex shift 5, edge shift 4" in out
    run(capsys, "generate", "ladder", "2", "--out", str(tmp_path / "a.json"))
    run(capsys, "generate", "prism", "3", "--out", str(tmp_path / "b.json"))
    (tmp_path / "m.txt").write_text("a.json\nb.json\n")
    code, out, _ = run(capsys, "chain", str(tmp_path / "m.txt"))
    assert code in (0, 1) and "cut vertices: " in out
    code, _, _ = run(capsys, "chain")
    assert code == 2


def test_trees_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "trees", "--max-n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "tree_id,n,status,nodes_visited" and len(lines) == 8
    code, _, _ = run(capsys, "trees", "--max-n", "12")
    assert code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "tatforge", "generate", "prism", "4", "--out", str(tmp_path / "p.json")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert "verdict: TAT" in proc.stdout
