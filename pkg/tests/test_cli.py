import json

import pytest

from sscbounds import read_graph
from sscbounds.cli import main

PATH3 = "graph 3 undirected\nedge 0 1\nedge 1 2\n"
STAR4 = "graph 4 undirected\nedge 0 1\nedge 0 2\nedge 0 3\n"


@pytest.fixture
def path3_file(tmp_path):
    f = tmp_path / "path3.graph"
    f.write_text(PATH3)
    return str(f)


@pytest.fixture
def star4_file(tmp_path):
    f = tmp_path / "star4.graph"
    f.write_text(STAR4)
    return str(f)


def test_bounds_path3(path3_file, capsys):
    assert main(["bounds", path3_file, "--leaders", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert (out["delta"], out["zeta"], out["combined"]) == (3, 3, 3)


def test_bounds_star4_with_rank(star4_file, capsys):
    assert main(["bounds", star4_file, "--leaders", "0", "--rank", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert (out["delta"], out["zeta"], out["combined"]) == (2, 1, 2)
    assert out["gamma_upper"] == 2


def test_bounds_csv_format(path3_file, capsys):
    assert main(["bounds", path3_file, "--leaders", "0,2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("n,m,delta")
    assert lines[1].startswith("3,2,3,True,3,3,True,")


def test_bad_leader_id_exits_1(path3_file, capsys):
    assert main(["bounds", path3_file, "--leaders", "9"]) == 1
    assert "error:" in capsys.readouterr().err


def test_missing_file_exits_1(capsys):
    assert main(["bounds", "/nonexistent.graph", "--leaders", "0"]) == 1


def test_leaders_from_file(tmp_path, path3_file, capsys):
    lf = tmp_path / "leaders.txt"
    lf.write_text("0, 2\n")
    assert main(["bounds", path3_file, "--leaders", f"@{lf}"]) == 0
    assert json.loads(capsys.readouterr().out)["m"] == 2


def test_zf_with_trace(path3_file, capsys):
    assert main(["zf", path3_file, "--leaders", "0", "--trace"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["zeta"] == 3 and out["is_zfs"]
    assert out["trace"] == [{"forcer": 0, "forced": 1}, {"forcer": 1, "forced": 2}]


def test_delta_certificate(star4_file, capsys):
    assert main(["delta", star4_file, "--leaders", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["delta"] == 2 and out["exact"]
    assert len(out["sequence"]) == 2


def test_gamma_with_evidence(tmp_path, star4_file, capsys):
    evid = tmp_path / "evidence.csv"
    assert main([
        "gamma", star4_file, "--leaders", "0",
        "--samples", "4", "--seed", "3", "--evidence-out", str(evid),
    ]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["gamma_upper"] == 2
    assert evid.read_text().splitlines()[0] == "seed,scheme,rank,runtime_ms"


def test_generate_then_bounds_round_trip(tmp_path, capsys):
    out_file = tmp_path / "er.graph"
    assert main([
        "generate", "--family", "er", "--n", "12", "--p", "0.3",
        "--seed", "5", "-o", str(out_file),
    ]) == 0
    g = read_graph(str(out_file))
    assert g.n == 12
    capsys.readouterr()
    assert main(["bounds", str(out_file), "--leaders", "0,1"]) == 0


def test_generate_stdout_json(capsys):
    assert main(["generate", "--family", "star", "--n", "4", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["n"] == 4 and not obj["directed"]


def test_generate_er_requires_p(capsys):
    assert main(["generate", "--family", "er", "--n", "5"]) == 1


def test_ensemble_writes_files_and_reruns_identically(tmp_path, capsys):
    cfg = {
        "family": "er", "n": 10, "p": 0.3,
        "leader_counts": [2, 10], "instances_per_point": 3, "seed": 11,
    }
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps(cfg))
    out_dir = tmp_path / "out"
    assert main(["ensemble", str(cfg_file), "--out-dir", str(out_dir), "--workers", "1"]) == 0
    paths = capsys.readouterr().out.strip().splitlines()
    assert len(paths) == 2
    first = [open(p).read() for p in paths]
    assert main(["ensemble", str(cfg_file), "--out-dir", str(out_dir), "--workers", "1"]) == 0
    capsys.readouterr()
    second = [open(p).read() for p in paths]
    assert first == second


def test_ensemble_invalid_config(tmp_path, capsys):
    cfg_file = tmp_path / "bad.json"
    cfg_file.write_text(json.dumps({"family": "er", "n": 10, "p": 1.5, "leader_counts": [2]}))
    assert main(["ensemble", str(cfg_file)]) == 1


def test_verify_exhaustive_small(capsys):
    assert main(["verify", "--suite", "exhaustive", "--max-n", "3"]) == 0
    out = capsys.readouterr().out
    assert "violations: 0" in out
    assert "strict-combined instance: delta=4 zeta=4 combined=5" in out


def test_verify_random_small(capsys):
    assert main(["verify", "--suite", "random", "--count", "25", "--max-n", "8", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert "violations: 0" in out


def test_verify_rejects_oversized_exhaustive(capsys):
    assert main(["verify", "--suite", "exhaustive", "--max-n", "9"]) == 1
