import json
import subprocess
import sys

import pytest

C4_EDGELIST = "4 4\n0 1\n1 2\n2 3\n3 0\n"
K4_EDGELIST = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
P4_DIMACS = "c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"


def run_cli(*args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "ifvs", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_yes_instance_exit_zero(tmp_path):
    inst = tmp_path / "c4.txt"
    inst.write_text(C4_EDGELIST)
    proc = run_cli("ifvs", "--k", "1", "--input", str(inst), "--json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["decision"] == "yes"
    assert len(report["certificate"]) == 1
    assert report["stats"]["dp_cells"] > 0
    assert "ms" in report["stats"]


def test_absent_instance_exit_one():
    proc = run_cli("ifvs", "--k", "5", "--json", stdin=K4_EDGELIST)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["decision"] == "no-ifvs-exists"


def test_no_within_k_distinguished():
    proc = run_cli("ifvs", "--k", "0", "--json", stdin=C4_EDGELIST)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["decision"] == "no-within-k"


def test_fvs_on_forest():
    proc = run_cli("fvs", "--k", "0", "--json", stdin=P4_DIMACS)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["decision"] == "yes" and report["certificate"] == []


def test_usage_errors_exit_two():
    assert run_cli("ifvs", stdin=C4_EDGELIST).returncode == 2  # --k missing
    assert run_cli("ifvs", "--k", "-1", stdin=C4_EDGELIST).returncode == 2
    proc = run_cli("ifvs", "--k", "1", stdin="4 2\n0 1\nbroken\n")
    assert proc.returncode == 2
    assert "line 3" in proc.stderr


def test_text_and_json_agree():
    text = run_cli("ifvs", "--k", "1", stdin=C4_EDGELIST)
    as_json = run_cli("ifvs", "--k", "1", "--json", stdin=C4_EDGELIST)
    assert text.returncode == as_json.returncode == 0
    report = json.loads(as_json.stdout)
    assert "decision: yes" in text.stdout
    assert f"certificate ({len(report['certificate'])})" in text.stdout


def test_trace_goes_to_stderr():
    proc = run_cli("ifvs", "--k", "1", "--trace", stdin=C4_EDGELIST)
    assert proc.returncode == 0
    assert "forest nodes" in proc.stderr and "candidate {" in proc.stderr
    assert "forest nodes" not in proc.stdout


def test_json_certificate_revalidates(tmp_path):
    from ifvs import load_graph, mask_of

    proc = run_cli("ifvs", "--k", "2", "--json", stdin=C4_EDGELIST)
    report = json.loads(proc.stdout)
    g = load_graph(C4_EDGELIST)
    assert g.is_ifvs(mask_of(report["certificate"]))


def test_gen_is_deterministic_and_forced():
    a = run_cli("gen", "--n", "6", "--m", "7", "--seed", "1")
    b = run_cli("gen", "--n", "6", "--m", "7", "--seed", "1")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    k4 = run_cli("gen", "--n", "4", "--m", "6", "--seed", "5")
    assert k4.stdout.splitlines()[0] == "4 6"
    assert run_cli("gen", "--n", "3", "--m", "9").returncode == 2


def test_output_flag_writes_files(tmp_path):
    dest = tmp_path / "g.txt"
    assert run_cli("gen", "--n", "5", "--m", "4", "--output", str(dest)).returncode == 0
    assert dest.read_text().splitlines()[0] == "5 4"
    spec = tmp_path / "fam.csv"
    spec.write_text("5,4,1,1\n")
    csv_dest = tmp_path / "out.csv"
    assert run_cli("bench", "--spec", str(spec), "--output", str(csv_dest)).returncode == 0
    assert csv_dest.read_text().startswith("n,m,k,decision")


def test_explicit_format_mismatch_fails():
    proc = run_cli("ifvs", "--k", "1", "--format", "dimacs", stdin=C4_EDGELIST)
    assert proc.returncode == 2


def test_gen_output_parses_and_solves():
    g = run_cli("gen", "--n", "8", "--m", "9", "--seed", "2")
    proc = run_cli("ifvs", "--k", "8", "--json", stdin=g.stdout)
    assert proc.returncode in (0, 1)
    json.loads(proc.stdout)


def test_oracle_subcommand():
    proc = run_cli("oracle", stdin=C4_EDGELIST)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"size": 1, "certificate": [0]}
    proc = run_cli("oracle", stdin=K4_EDGELIST)
    assert proc.returncode == 1
    assert json.loads(proc.stdout) == {"absent": True}
    proc = run_cli("oracle", "--problem", "fvs", stdin=K4_EDGELIST)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["size"] == 2


def test_bench_subcommand(tmp_path):
    spec = tmp_path / "family.csv"
    spec.write_text("n,m,k,reps\n6,6,1,2\n")
    proc = run_cli("bench", "--spec", str(spec), "--seed", "4")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "n,m,k,decision,cert_size,ms,candidates,dp_cells,ratio"
    assert len(lines) == 3


def test_no_timing_strips_ms():
    proc = run_cli("ifvs", "--k", "1", "--json", "--no-timing", stdin=C4_EDGELIST)
    assert "ms" not in json.loads(proc.stdout)["stats"]


@pytest.mark.parametrize("threads", ["1", "8"])
def test_threads_flag_accepted(threads):
    proc = run_cli("ifvs", "--k", "1", "--threads", threads, stdin=C4_EDGELIST)
    assert proc.returncode == 0
