import json
import subprocess
import sys

import pytest

from burnkit.cli import main
from burnkit.io import read_edge_list, write_edge_list
from burnkit.verify import FIGURE1_LABELS, figure1_tree


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fig_files(tmp_path):
    edges = tmp_path / "fig.txt"
    write_edge_list(figure1_tree(), edges)
    labels = tmp_path / "labels.json"
    labels.write_text(json.dumps(FIGURE1_LABELS))
    return str(edges), str(labels)


def test_burn_figure_table(capsys, fig_files):
    edges, labels = fig_files
    code, out, _ = run(capsys, "burn", "--input", edges, "--labels", labels, "--sources", "v3,v6,v9")
    assert code == 0
    assert "all 9 vertices burned by round 3" in out
    assert "v1 v2 v4 v6" in out


def test_burn_reports_unburned(capsys):
    code, out, _ = run(capsys, "burn", "--family", "path", "--n", "4", "--sources", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and not data["complete"] and data["unburned"] == ["0", "2", "3"]


def test_malformed_file_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\n0 x\n")
    code, _, err = run(capsys, "exact", "--input", str(bad))
    assert code == 2 and "non-integer" in err
    assert run(capsys, "exact", "--input", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "exact")[0] == 2


def test_exact_and_budget(capsys):
    code, out, _ = run(capsys, "exact", "--family", "figure1")
    assert code == 0 and json.loads(out)["burning_number"] == 3
    code, out, _ = run(capsys, "exact", "--family", "path", "--n", "25", "--budget", "3")
    assert code == 3 and json.loads(out)["lower_bound"] == 4


def test_bounds_and_table(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "118", "--k", "3")
    data = json.loads(out)
    assert code == 0 and data["bound_branching"] == 11 and data["bound_leafstrip"] == 11
    code, out, _ = run(capsys, "table1")
    lines = out.strip().splitlines()
    assert lines[0] == "k,n" and len(lines) == 13 and lines[1] == "3,118" and lines[-1] == "200,1127"


def test_verify_alias(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma4", "--trees", "500", "--seed", "42")
    assert code == 0 and "PASS" in out


def test_schedule_power_spantree(capsys, tmp_path):
    code, out, _ = run(capsys, "schedule", "--family", "branching-tree", "--n", "50", "--k", "4", "--seed", "3")
    data = json.loads(out)
    assert code == 0 and data["within_bound"] and data["recursion_log"]
    code, out, _ = run(capsys, "schedule", "--family", "branching-tree", "--n", "30", "--k", "3",
                       "--method", "leafstrip", "--format", "text")
    assert code == 0 and "bound[leafstrip]" in out
    code, out, _ = run(capsys, "power", "--family", "random-graph", "--n", "15", "--m", "20", "--k", "2")
    assert code == 0 and json.loads(out)["within_bound"]
    target = tmp_path / "s.txt"
    code, out, _ = run(capsys, "spantree", "--family", "random-tree", "--n", "20", "--k", "2", "--out", str(target))
    assert code == 0 and read_edge_list(target).m == 19


def test_domain_errors_exit_2(capsys):
    assert run(capsys, "schedule", "--family", "path", "--n", "5", "--k", "3")[0] == 2
    assert run(capsys, "power", "--family", "path", "--n", "4", "--k", "9")[0] == 2
    assert run(capsys, "schedule", "--family", "branching-tree", "--n", "3", "--k", "3")[0] == 2


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--family", "star", "--n", "7")
    assert code == 0 and json.loads(out)["branch"] == 6


def test_deterministic_output(capsys):
    argv = ["schedule", "--family", "branching-tree", "--n", "70", "--k", "3", "--seed", "9"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
    argv = ["verify", "--suite", "counting", "--trees", "50", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_report_writes_files(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "--outdir", str(tmp_path / "rep"), "--k", "4", "--n", "80")
    assert code == 0
    names = {p.name for p in (tmp_path / "rep").iterdir()}
    assert {"table1.csv", "bounds_k4.csv", "threshold.png", "bounds_k4.png", "figure1_trace.png"} <= names
    assert (tmp_path / "rep" / "threshold.png").read_bytes()[:4] == b"\x89PNG"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "burnkit.cli", "table1", "--format", "text"],
                          capture_output=True, text=True, check=True)
    assert "k=3" in proc.stdout
