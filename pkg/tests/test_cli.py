"""End-to-end command-line behavior: output, files, figures, exit codes."""

import json

import pytest

from chaoslab.cli import main


def test_converge_json_stdout(capsys):
    code = main(["converge", "--model", "free", "--r", "2,2", "--n", "4,8,16"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["verdict"] == "PASS"
    assert [row["gap"] for row in doc["rows"]] == ["1/4", "1/8", "1/16"]


def test_csv_output_and_out_file(tmp_path, capsys):
    out = tmp_path / "report.csv"
    code = main(
        ["residual", "--model", "classical", "--r", "2", "--t", "1", "--n", "4,6", "--format", "csv", "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "instance,drift,residual,limit,gap,gap_decimal,error"
    assert lines[-1] == "verdict,PASS"
    assert capsys.readouterr().out == ""


def test_plot_dir_renders_figures(tmp_path):
    plot = tmp_path / "figs"
    assert main(["converge", "--r", "2,2", "--n", "4,8", "--plot-dir", str(plot)]) == 0
    assert main(["count", "--r", "2,2", "--plot-dir", str(plot), "--out", str(tmp_path / "c.json")]) == 0
    assert main(["crossval", "--max-total", "4", "--plot-dir", str(plot), "--out", str(tmp_path / "x.json")]) == 0
    produced = {p.name for p in plot.iterdir()}
    assert produced == {"converge.png", "count.png", "crossval.png"}
    assert (plot / "converge.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_exit_code_2_on_fail(capsys):
    # far from the limit at n=2: the convergence envelope fails honestly
    code = main(["converge", "--model", "free", "--r", "2,2,2,2", "--n", "2"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "FAIL"
    assert code == 2


def test_exit_code_3_on_usage_errors(capsys):
    assert main(["crossval", "--max-total", "7"]) == 3
    assert main(["converge", "--r", "2,x", "--n", "4"]) == 3
    assert main(["freeness", "--r", "1,1", "--t", "1,2", "--word", "AZ", "--n", "4"]) == 3
    assert main(["converge", "--model", "bogus", "--r", "2,2", "--n", "4"]) == 3
    err = capsys.readouterr().err
    assert "error" in err


def test_exit_code_3_on_guard(capsys):
    code = main(["converge", "--r", "2,2", "--n", "4,50", "--guard", "300"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 3
    assert doc["rows"][1]["error"].startswith("instance too large")
    # the valid row is still reported
    assert doc["rows"][0]["values"]["trace"] == "3/4"


def test_remaining_subcommands(capsys):
    assert main(["paths", "--r", "2,2,2", "--irreducible"]) == 0
    assert main(["tableaux", "--r", "2,2"]) == 0
    assert main(["toeplitz", "--r", "1,2,1"]) == 0
    assert main(["linearize", "--family", "charlier", "--r", "1,1", "--k", "0"]) == 0
    capsys.readouterr()


def test_byte_identical_reruns(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["freeness", "--r", "1,1", "--t", "1,2", "--word", "ABABAB", "--n", "2,3,4", "--out"]
    assert main(argv + [str(a)]) == 0
    assert main(argv + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
