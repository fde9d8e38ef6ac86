"""Command-line surface: exit codes, report files, determinism."""

import json

from g2soliton.cli import main


def run_cli(*argv):
    return main(list(argv))


def test_verify_g2_weierstrass_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run_cli("verify-g2", "--lambda", "1,2,1,3,1,4,5", "--set", "weierstrass", "--out", str(out))
    assert code == 0
    report = json.loads(out.read_text())
    entries = report["entries"]
    assert len(entries) == 7
    assert all(e["status"] == "zero" for e in entries)
    table = capsys.readouterr().out
    assert "W1" in table and "zero" in table


def test_verify_g2_rational_lambda_text(tmp_path):
    out = tmp_path / "report.json"
    code = run_cli(
        "verify-g2", "--lambda", "lambda = [1/2, 2, 1, 3/5, 1, 4, 5]", "--set", "integrability",
        "--out", str(out),
    )
    assert code == 0
    assert all(e["status"] == "zero" for e in json.loads(out.read_text())["entries"])


def test_verify_g2_skipped_set_fails():
    code = run_cli("verify-g2", "--lambda", "1,2,1,3,1,4,5", "--set", "jacobi-special")
    assert code == 1


def test_verify_g2_unknown_set():
    code = run_cli("verify-g2", "--lambda", "1,2,1,3,1,4,5", "--set", "nonsense")
    assert code == 1


def test_bad_lambda_is_usage_error():
    assert run_cli("verify-g2", "--lambda", "1,2,3", "--set", "weierstrass") == 2


def test_half_period_with_projective_match(tmp_path):
    out = tmp_path / "hp.json"
    code = run_cli("half-period", "--lambda", "0,4,1,1,1,4,0", "--out", str(out))
    assert code == 0
    entries = json.loads(out.read_text())["entries"]
    assert [e["identity"] for e in entries] == ["HP.1", "HP.2", "HP.3", "GII"]
    assert all(e["status"] == "zero" for e in entries)


def test_half_period_without_normalization(tmp_path):
    out = tmp_path / "hp.json"
    code = run_cli("half-period", "--lambda", "0,2,1,1,1,4,0", "--out", str(out))
    assert code == 0
    entries = json.loads(out.read_text())["entries"]
    assert [e["identity"] for e in entries] == ["HP.1", "HP.2", "HP.3"]


def test_half_period_guard_exits_nonzero(tmp_path):
    out = tmp_path / "hp.json"
    code = run_cli("half-period", "--lambda", "1,2,1,3,1,4,5", "--out", str(out))
    assert code == 1
    entries = json.loads(out.read_text())["entries"]
    assert entries[0]["status"] == "skipped"


def test_kummer_command(tmp_path):
    out = tmp_path / "k.json"
    assert run_cli("kummer", "--lambda", "2,3,1,5,1,4,0", "--out", str(out)) == 0
    tags = [e["identity"] for e in json.loads(out.read_text())["entries"]]
    assert tags == ["KUM2", "KUM1"]
    assert run_cli("kummer", "--lambda", "1,2,1,3,1,4,5", "--out", str(out)) == 0
    tags = [e["identity"] for e in json.loads(out.read_text())["entries"]]
    assert tags == ["KUM2"]


def test_sweep_deterministic_reports(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ("sweep", "--count", "3", "--seed", "42", "--set", "weierstrass")
    assert run_cli(*args, "--out", str(out1)) == 0
    assert run_cli(*args, "--out", str(out2)) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_sweep_parallel_same_entries(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ("sweep", "--count", "4", "--seed", "5", "--set", "integrability")
    assert run_cli(*args, "--jobs", "1", "--out", str(out1)) == 0
    assert run_cli(*args, "--jobs", "2", "--out", str(out2)) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_sweep_special_sets_with_constraints(tmp_path):
    out = tmp_path / "s.json"
    code = run_cli(
        "sweep", "--count", "3", "--seed", "9", "--set", "jacobi-special",
        "--constraints", "l0=0,l6=0", "--out", str(out),
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert report["summary"]["nonzero"] == 0 and report["summary"]["skipped"] == 0


def test_elliptic_check_writes_csv(tmp_path):
    csv_path = tmp_path / "grid.csv"
    out = tmp_path / "e.json"
    code = run_cli(
        "elliptic-check", "--k", "0.7", "--re", "0.2:1.8:6", "--im=-0.4:0.4:6",
        "--csv", str(csv_path), "--out", str(out),
    )
    assert code == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "z_re,z_im,residual_abs"
    assert len(lines) > 20
    summary = json.loads(out.read_text())
    assert summary["worst_sn_ode_residual"] < 1e-10
    assert summary["worst_halfperiod_residual"] < 1e-9


def test_static_transforms_command(tmp_path):
    out = tmp_path / "t.json"
    assert run_cli("static-transforms", "--samples", "8", "--out", str(out)) == 0
    summary = json.loads(out.read_text())
    assert all(v < 1e-8 for v in summary["factorization_worst"].values())
    assert all(v < 1e-8 for v in summary["sn_profile_worst"].values())


def test_akns_check_command(tmp_path):
    out = tmp_path / "a.json"
    assert run_cli("akns-check", "--jets", "50", "--draws", "10", "--out", str(out)) == 0
    summary = json.loads(out.read_text())
    assert summary["worst_diagonal"] < 1e-13


def test_pde_run_soliton(tmp_path):
    csv_path = tmp_path / "traj.csv"
    out = tmp_path / "run.json"
    code = run_cli(
        "pde-run", "--eq", "kdv", "--t-end", "0.05", "--init", "soliton:c=4,x0=10",
        "--csv", str(csv_path), "--out", str(out),
    )
    assert code == 0
    summary = json.loads(out.read_text())
    assert summary["pde_residual_window"] < 1e-6
    assert all(v < 1e-7 for v in summary["invariant_drifts"].values())
    header = csv_path.read_text().splitlines()[0]
    assert header == "t,x,re_u,im_u"


def test_pde_run_file_init(tmp_path):
    data = tmp_path / "init.csv"
    data.write_text("\n".join(f"{0.1},{0.0}" for _ in range(64)))
    out = tmp_path / "run.json"
    code = run_cli(
        "pde-run", "--eq", "gmkdv", "--a", "1.5", "--n", "64", "--L", "20",
        "--t-end", "0.02", "--init", f"file:{data}", "--out", str(out),
    )
    assert code == 0


def test_miura_pipeline_command(tmp_path):
    out = tmp_path / "m.json"
    assert run_cli("miura-pipeline", "--t-end", "0.02", "--out", str(out)) == 0
    summary = json.loads(out.read_text())
    assert summary["mapped_kdv_residual"] < 1e-6
