"""Golden-run CLI fixtures: outputs, exit codes, byte stability."""

import subprocess
import sys

import pytest

from exgraph.core import parse_graph, RootedGraph


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "exgraph", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


@pytest.fixture
def workdir(tmp_path):
    files = {
        "c4.el": "n 4\n0 1\n1 2\n2 3\n3 0\n",
        "c4s.el": (
            "n 4\n0 1\n1 2\n2 3\n3 0\n"
            "part 0 0\npart 1 1\npart 2 0\npart 3 1\n"
        ),
        "c4r.el": "n 4\n0 1\n1 2\n2 3\n3 0\nroot 0\n",
        "c6.el": "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n",
        "k23.el": "n 5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n",
        "bad.el": "n 3\n0 1\n0 1\n",
    }
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def test_construct_critical_golden(workdir):
    res = run_cli("construct", "--family", "critical", "--r", "2",
                  "--out", "g.el", cwd=workdir)
    assert res.returncode == 0
    g = parse_graph((workdir / "g.el").read_text())
    assert isinstance(g, RootedGraph)
    assert g.graph.n == 8 and g.graph.num_edges == 12
    assert g.graph.degree(g.root) == 2


def test_construct_needs_params():
    res = run_cli("construct", "--family", "cycle")
    assert res.returncode == 2


def test_construct_sided_rejects_odd_cycle():
    res = run_cli("construct", "--family", "cycle", "--ell", "5", "--sided")
    assert res.returncode == 2


def test_check_properties_and_expect(workdir):
    res = run_cli("check", "--in", "c4.el", "--r", "2", cwd=workdir)
    assert res.returncode == 0
    assert "degeneracy,2" in res.stdout
    assert "critical-2,0" in res.stdout
    res = run_cli("check", "--in", "c4.el", "--expect", "edges=4", cwd=workdir)
    assert res.returncode == 0
    res = run_cli("check", "--in", "c4.el", "--expect", "edges=5", cwd=workdir)
    assert res.returncode == 1


def test_parse_error_exit_code(workdir):
    res = run_cli("check", "--in", "bad.el", cwd=workdir)
    assert res.returncode == 2
    assert "line 3" in res.stderr


def test_unknown_flag_exit_code(workdir):
    res = run_cli("check", "--in", "c4.el", "--nonsense", cwd=workdir)
    assert res.returncode == 2


def test_count_csv(workdir):
    res = run_cli("count", "--in", "k23.el", "--pattern", "c4.el",
                  "--hom-cycle", "4", cwd=workdir)
    assert res.returncode == 0
    assert "copies,3" in res.stdout
    assert "name,value" in res.stdout.splitlines()[0]


def test_census_golden(workdir):
    res = run_cli("census", "--in", "k23.el", "--tau", "2", cwd=workdir)
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "a,b,c,d,codeg-ac,codeg-bd,kind"
    assert len(lines) == 4
    assert all(line.endswith("thick") for line in lines[1:])
    res = run_cli("census", "--in", "k23.el", "--tau", "3",
                  "--gamma-out", "gamma.el", cwd=workdir)
    assert all(line.endswith("thin") for line in res.stdout.strip().splitlines()[1:])
    gamma = parse_graph((workdir / "gamma.el").read_text())
    assert gamma.n == 6 and gamma.num_edges == 6


def test_extremal_zar_golden(workdir):
    res = run_cli("extremal", "--mode", "zar", "--n", "3", "--m", "3",
                  "--pattern", "c4s.el", cwd=workdir)
    assert res.returncode == 0
    row = res.stdout.strip().splitlines()[1].split(",")
    assert row[0] == "zar" and row[4] == "6" and row[5] == "1"


def test_extremal_zar_needs_sides(workdir):
    res = run_cli("extremal", "--mode", "zar", "--n", "3", "--m", "3",
                  "--pattern", "c4.el", cwd=workdir)
    assert res.returncode == 2


def test_extremal_witness_file(workdir):
    res = run_cli("extremal", "--mode", "general", "--n", "5",
                  "--pattern", "c4.el", "--out", "res.csv", cwd=workdir)
    assert res.returncode == 0
    witness = parse_graph((workdir / "res.csv.witness.el").read_text())
    assert witness.num_edges == 6


def test_extremal_budget_exit_code(workdir):
    res = run_cli("extremal", "--mode", "general", "--n", "6",
                  "--pattern", "c4.el", "--max-nodes", "4", cwd=workdir)
    assert res.returncode == 3
    row = res.stdout.strip().splitlines()[1].split(",")
    assert row[5] == "0"  # not exact


def test_verify_chain_golden(workdir):
    res = run_cli("verify", "--suite", "chain", "--pattern", "c4s.el",
                  "--n", "3", cwd=workdir)
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 4
    assert all(line.endswith(",1") for line in lines[1:])


def test_verify_chain_budget_exit(workdir):
    res = run_cli("verify", "--suite", "chain", "--pattern", "c4s.el",
                  "--n", "3", "--max-nodes", "3", cwd=workdir)
    assert res.returncode == 3


def test_verify_critical_suite(workdir):
    res = run_cli("verify", "--suite", "critical", cwd=workdir)
    assert res.returncode == 0


def test_pipeline_glue_success_and_files(workdir):
    run_cli("construct", "--family", "complete-bipartite", "--a", "9",
            "--b", "9", "--out", "k99.el", cwd=workdir)
    res = run_cli("pipeline", "glue", "--host", "k99.el", "--h1", "c4r.el",
                  "--h2", "c4r.el", "--out-dir", "out", cwd=workdir)
    assert res.returncode == 0
    assert "result=found" in res.stdout
    assert "route=pipeline" in res.stdout
    pattern = parse_graph((workdir / "out" / "pattern.el").read_text())
    assert pattern.graph.n == 7
    copy = parse_graph((workdir / "out" / "copy.el").read_text())
    assert copy.num_edges == 8


def test_pipeline_glue_failure_exit(workdir):
    res = run_cli("pipeline", "glue", "--host", "c6.el", "--h1", "c4r.el",
                  "--h2", "c4r.el", cwd=workdir)
    assert res.returncode == 1
    assert "result=failure" in res.stdout


def test_pipeline_glue_needs_root(workdir):
    res = run_cli("pipeline", "glue", "--host", "c6.el", "--h1", "c4.el",
                  "--h2", "c4r.el", cwd=workdir)
    assert res.returncode == 2


def test_pipeline_case2_trace(workdir):
    res = run_cli("pipeline", "case2", "--in", "k23.el", "--tau", "3",
                  "--ell", "2", cwd=workdir)
    assert res.returncode == 0
    assert "gamma-vertices=6" in res.stdout
    assert "beta-share=" in res.stdout


def test_csv_byte_stability(workdir):
    args = ("verify", "--suite", "lemma37", "--seed", "7", "--count", "5")
    first = run_cli(*args, cwd=workdir)
    second = run_cli(*args, cwd=workdir)
    assert first.stdout == second.stdout and first.returncode == 0
    a = run_cli("count", "--in", "k23.el", "--hom-cycle", "4", cwd=workdir)
    b = run_cli("count", "--in", "k23.el", "--hom-cycle", "4", cwd=workdir)
    assert a.stdout == b.stdout


def test_threads_flag_does_not_change_output(workdir):
    a = run_cli("census", "--in", "k23.el", "--tau", "2", cwd=workdir)
    b = run_cli("--threads", "4", "census", "--in", "k23.el", "--tau", "2",
                cwd=workdir)
    assert a.stdout == b.stdout
