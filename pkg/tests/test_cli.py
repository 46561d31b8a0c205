"""Tests for the command-line driver.

Frozen expectations used below (independently checkable by hand):

* chihara(1, 1, 1/2) has diag(2) = 1/2 and sub(2) = 1/10, and its monic
  degree-2 member is x^2 - 3/4.
* the chihara weight is supported on two symmetric intervals, so a
  weight-sample run with M points per component prints 2M data rows.
"""

import json

import pytest

from dunklpoly.cli import run
from dunklpoly.report import parse


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- informational subcommands ----------------------------------------------------


def test_coeffs_example(capsys):
    code, out, _ = _run(capsys, [
        "coeffs", "--family", "chihara",
        "--alpha", "1", "--beta", "1", "--gamma", "1/2", "--n", "2",
    ])
    assert code == 0
    assert out == "diag 1/2\nsub 1/10\n"


def test_poly_example(capsys):
    code, out, _ = _run(capsys, [
        "poly", "--family", "chihara",
        "--alpha", "1", "--beta", "1", "--gamma", "1/2", "--n", "2",
    ])
    assert code == 0
    assert out == "x^2 - 3/4\n"


def test_weight_sample_covers_both_components(capsys):
    code, out, _ = _run(capsys, [
        "weight-sample", "--family", "chihara",
        "--alpha", "1", "--beta", "1", "--gamma", "1/2", "--points", "4",
    ])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,weight"
    rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
    assert len(rows) == 8
    assert sum(x < 0 for x, _ in rows) == 4
    assert sum(x > 0 for x, _ in rows) == 4
    assert all(w > 0 for _, w in rows)


def test_weight_sample_single_component_family(capsys):
    code, out, _ = _run(capsys, [
        "weight-sample", "--family", "gegenbauer",
        "--alpha", "1", "--beta", "1", "--points", "5",
    ])
    assert code == 0
    assert len(out.strip().splitlines()) == 6


# -- verification subcommands ------------------------------------------------------


def test_eigencheck_sweep_prints_per_degree(capsys):
    code, out, _ = _run(capsys, [
        "eigencheck", "--operator", "chihara_D",
        "--alpha", "1", "--beta", "1", "--gamma", "1/2",
        "--eps", "2/3", "--cap", "4",
    ])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert all(line.endswith("exact_pass") for line in lines)
    assert lines[3].startswith("n= 3 lambda=17/3")


def test_eigencheck_json_stream(capsys):
    code, out, _ = _run(capsys, [
        "eigencheck", "--operator", "gh_OmegaTilde",
        "--mu", "3/2", "--eps", "1/4", "--cap", "3", "--json",
    ])
    assert code == 0
    rows = json.loads(out)
    assert [row["degrees"] for row in rows] == ["0", "1", "2", "3"]
    assert {row["outcome"] for row in rows} == {"exact_pass"}
    # The stream replaces the human-readable sweep lines.
    assert out.lstrip().startswith("[")


def test_algebra_lists_relations(capsys):
    code, out, _ = _run(capsys, [
        "algebra", "--which", "chihara", "--alpha", "1", "--beta", "1",
        "--gamma", "1/2", "--eps", "2/3", "--cap", "4",
    ])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert all(line.endswith("exact_pass") for line in lines)


def test_gram_and_norms_and_pearson(capsys):
    for argv in (
        ["gram", "--family", "gen_hermite", "--mu", "3/2", "--cap", "6"],
        ["norms", "--family", "gegenbauer", "--alpha", "1", "--beta", "1",
         "--cap", "6", "--exact-cap", "10"],
        ["pearson", "--family", "chihara", "--alpha", "1", "--beta", "2",
         "--gamma", "1/3"],
    ):
        code, out, err = _run(capsys, argv)
        assert code == 0, (argv, err)
        assert "fail" not in out


def test_transform_exact_route(capsys):
    code, out, _ = _run(capsys, [
        "transform", "--a", "1", "--b", "1", "--c", "3/5", "--cap", "6",
    ])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all(line.endswith("exact_pass") for line in lines)


def test_transform_irrational_scale_falls_back_to_float(capsys):
    code, out, _ = _run(capsys, [
        "transform", "--a", "1", "--b", "1", "--c", "1/3", "--cap", "6",
        "--csv",
    ])
    assert code == 0
    records = parse(out, "csv")
    outcomes = {r.target: r.outcome for r in records}
    assert outcomes["roundtrip"] == "exact_pass"
    assert outcomes["chihara-map"] == "float_pass"
    assert outcomes["coefficient-identity"] == "float_pass"


def test_limits_prints_steps_and_orders(capsys):
    code, out, _ = _run(capsys, [
        "limits", "--case", "bigq_q_to_minus1",
        "--steps", "1e-3,1e-4,1e-5",
    ])
    assert code == 0
    assert out.count("step ") == 3
    assert "overall order: 1.000" in out
    assert "monotone: yes" in out


def test_suite_subset_table_and_file_output(capsys, tmp_path):
    out_path = tmp_path / "records.json"
    code, out, _ = _run(capsys, [
        "suite", "--only", "jacobi,negative-controls",
        "--json", str(out_path),
    ])
    assert code == 0
    assert "jacobi" in out and "negative-controls" in out and "total" in out
    rows = json.loads(out_path.read_text())
    assert [row["suite"] for row in rows] == ["jacobi"] * 3 + ["negative-controls"] * 2


def test_suite_stream_is_deterministic_excluding_millis(capsys):
    argv = ["suite", "--only", "jacobi,transform", "--json"]
    code_a, out_a, _ = _run(capsys, argv)
    code_b, out_b, _ = _run(capsys, argv)
    assert code_a == code_b == 0
    rows_a, rows_b = json.loads(out_a), json.loads(out_b)
    for row in rows_a + rows_b:
        row["millis"] = 0.0
    assert json.dumps(rows_a) == json.dumps(rows_b)


def test_threads_env_changes_nothing(capsys, monkeypatch):
    argv = ["suite", "--only", "jacobi", "--json"]
    _, out_seq, _ = _run(capsys, argv)
    monkeypatch.setenv("DUNKLPOLY_THREADS", "3")
    _, out_par, _ = _run(capsys, argv)
    rows_seq, rows_par = json.loads(out_seq), json.loads(out_par)
    for row in rows_seq + rows_par:
        row["millis"] = 0.0
    assert rows_seq == rows_par


# -- exit statuses ------------------------------------------------------------------


def test_failing_check_exits_1_with_first_record(capsys):
    code, out, err = _run(capsys, [
        "gram", "--family", "chihara", "--alpha", "1", "--beta", "1",
        "--gamma", "1/2", "--cap", "4", "--tolerance", "1e-30",
    ])
    assert code == 1
    assert "fail" in out
    assert "first failing record" in err
    assert "suite=gram" in err


def test_usage_errors_exit_2(capsys, monkeypatch):
    cases = [
        [],                                                  # no subcommand
        ["coeffs", "--family", "chihara", "--alpha", "1",
         "--beta", "1", "--n", "2"],                         # missing --gamma
        ["coeffs", "--family", "chihara", "--alpha", "1.5",
         "--beta", "1", "--gamma", "1/2", "--n", "2"],       # float rational
        ["coeffs", "--family", "gegenbauer", "--alpha", "1",
         "--beta", "1", "--gamma", "1/2", "--n", "2"],       # stray flag
        ["suite"],                                           # neither --all/--only
        ["suite", "--all", "--only", "jacobi"],              # both
        ["suite", "--only", "nonsense"],                     # unknown suite
        ["suite", "--only", "jacobi", "--json", "-",
         "--csv", "-"],                                      # exclusive formats
        ["limits", "--case", "cbi_h_to_0",
         "--steps", "1e-3,1e-4"],                            # too-short grid
        ["coeffs", "--family", "chihara", "--alpha", "0",
         "--beta", "-2", "--gamma", "3/4", "--n", "2"],      # degenerate family
    ]
    for argv in cases:
        code = run(argv)
        capsys.readouterr()
        assert code == 2, argv


def test_threads_env_must_be_positive_integer(capsys, monkeypatch):
    monkeypatch.setenv("DUNKLPOLY_THREADS", "zero")
    code, _, err = _run(capsys, ["suite", "--only", "jacobi"])
    assert code == 2
    assert "DUNKLPOLY_THREADS" in err
    monkeypatch.setenv("DUNKLPOLY_THREADS", "0")
    assert run(["suite", "--only", "jacobi"]) == 2
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()
