import json

import pytest
from click.testing import CliRunner

from parabi.cli import main

P0_ARGS = ["--case", "p0", "-j", "2", "-a", "-4", "-b", "0", "--alpha", "1/2"]


@pytest.fixture
def runner():
    return CliRunner()


def test_table_text(runner):
    result = runner.invoke(main, ["table", *P0_ARGS])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 6  # P_0 .. P_4 plus the characteristic P_5
    assert lines[0].startswith("P_0 (degree 0, leading 1)")
    assert lines[5].startswith("P_5 (degree 5, leading 1)")


def test_table_json_degrees_and_leading(runner):
    result = runner.invoke(main, ["table", *P0_ARGS, "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    degrees = [r["degree"] for r in payload["rows"]]
    assert degrees == sorted(degrees) and len(set(degrees)) == len(degrees)
    assert all(r["leading"] == "1" for r in payload["rows"])


def test_table_rejects_bad_parameters(runner):
    result = runner.invoke(
        main, ["table", "--case", "p0", "-j", "3", "-a", "-4", "-b", "0", "--alpha", "1/2"]
    )
    assert result.exit_code != 0
    result = runner.invoke(
        main, ["table", "--case", "p0", "-j", "2", "-a", "x", "-b", "0", "--alpha", "1/2"]
    )
    assert result.exit_code != 0
    result = runner.invoke(
        main, ["table", "--case", "p0", "-j", "2", "-a", "-4", "-b", "0", "--alpha", "3/2"]
    )
    assert result.exit_code != 0


def test_spectral_text_weight_sums(runner):
    result = runner.invoke(main, ["spectral", *P0_ARGS])
    assert result.exit_code == 0
    assert "grid: 5/4 -3/4 -5/4 3/4 1/4" in result.output
    assert "alpha=1/2, even_sum=1/2, odd_sum=1/2" in result.output


def test_spectral_csv_row_count(runner):
    result = runner.invoke(main, ["spectral", *P0_ARGS, "--format", "csv"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "s,x,w"
    assert len(lines) == 1 + 5  # header + N+1 rows


def test_spectral_json_rationals_are_strings(runner):
    result = runner.invoke(main, ["spectral", *P0_ARGS, "--format", "json"])
    payload = json.loads(result.output)
    assert payload["grid"] == ["5/4", "-3/4", "-5/4", "3/4", "1/4"]
    assert payload["weight_sums"]["even"] == "1/2"
    assert payload["weight_sums"]["even_target"] == "1/2"


def test_spectral_inadmissible_warns_but_emits_grid(runner):
    args = ["--case", "p0", "-j", "2", "-a", "-4", "-b", "0", "--alpha", "0"]
    result = runner.invoke(main, ["spectral", *args])
    assert result.exit_code == 0
    assert "warning" in result.output or "warning" in (result.stderr or "")
    assert "grid" in result.output


def test_verify_pass(runner):
    result = runner.invoke(main, ["verify", *P0_ARGS])
    assert result.exit_code == 0
    assert "orthogonality: PASS" in result.output
    assert "persymmetry: PASS" in result.output
    assert "FAIL" not in result.output


def test_verify_corrupt_negative_control(runner):
    result = runner.invoke(main, ["verify", *P0_ARGS, "--corrupt"])
    assert result.exit_code == 1
    assert "FAIL" in result.output
    assert "first failing identity" in result.output


def test_verify_persymmetry_gated_on_alpha(runner):
    args = ["--case", "p1", "-j", "2", "-a", "-4", "-b", "0", "--alpha", "1/3"]
    result = runner.invoke(main, ["verify", *args])
    assert result.exit_code == 0
    assert "persymmetry" not in result.output
    assert "geronimus: PASS" in result.output


def test_diagram_deterministic(runner):
    args = ["diagram", "--case", "p0", "-j", "2", "-a", "-5", "-b", "1/2", "--alpha", "1/2"]
    one = runner.invoke(main, args)
    two = runner.invoke(main, args)
    assert one.exit_code == 0
    assert one.output == two.output
    assert "d1=7/8 d2=5/8 d3=3/4 d4=1/4" in one.output


def test_diagram_svg_deterministic(runner):
    args = [
        "diagram", "--case", "p0", "-j", "2", "-a", "-5", "-b", "1/2",
        "--alpha", "1/2", "--svg",
    ]
    one = runner.invoke(main, args)
    two = runner.invoke(main, args)
    assert one.exit_code == 0
    assert one.output == two.output
    assert one.output.startswith("<svg")


def test_diagram_b0_labels_same_side_gaps_identically(runner):
    args = ["diagram", "--case", "p0", "-j", "2", "-a", "-5", "-b", "0", "--alpha", "1/2"]
    result = runner.invoke(main, args)
    assert result.exit_code == 0
    assert "d4" not in result.output.replace("d4=1/2", "")
    # uniform reduction: c = 0 and b = 0
    args = ["diagram", "--case", "p0", "-j", "2", "-a", "-3", "-b", "0", "--alpha", "1/2"]
    result = runner.invoke(main, args)
    assert "d=1/2" in result.output


def test_limit_csv_columns(runner):
    result = runner.invoke(
        main, ["limit", "--eps", "1e-3", "--eps", "1e-4", "--format", "csv"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "epsilon,max_dev_diag,max_dev_offdiag,max_imag"
    assert len(lines) == 3


def test_limit_requires_eps(runner):
    result = runner.invoke(main, ["limit"])
    assert result.exit_code != 0


def test_output_dir_env(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("PARABI_OUTPUT_DIR", str(tmp_path))
    result = runner.invoke(main, ["table", *P0_ARGS, "-o", "table.txt"])
    assert result.exit_code == 0
    assert (tmp_path / "table.txt").read_text().startswith("P_0")
