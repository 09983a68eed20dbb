import csv

import numpy as np
import pytest

from hrgen import GeneratorParams, generate, read_edgelist
from hrgen.analysis import AnalysisReport
from hrgen.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_writes_readable_file(tmp_path, capsys):
    out = tmp_path / "g.edges"
    code, stdout, _ = run_cli(
        capsys,
        "generate",
        "--nodes", "1000",
        "--avg-degree", "8",
        "--gamma", "3",
        "--seed", "7",
        "--output", str(out),
    )
    assert code == 0
    assert stdout.startswith("STATS\t")
    graph, header = read_edgelist(out)
    assert header is not None
    assert header.n == 1000 and header.seed == 7
    assert graph.m == header.m
    # the file matches a library-level run with the same parameters
    direct = generate(GeneratorParams(n=1000, avg_degree=8.0, gamma=3.0, seed=7))
    assert np.array_equal(graph.indices, direct.indices)
    stats = dict(
        item.split("=") for item in stdout.splitlines()[0].split("\t")[1:]
    )
    assert int(stats["m"]) == graph.m


def test_generate_byte_identical_across_threads(tmp_path, capsys):
    files = []
    for threads in ("1", "3"):
        out = tmp_path / f"t{threads}.edges"
        code, _, _ = run_cli(
            capsys,
            "generate",
            "--nodes", "5000",
            "--avg-degree", "10",
            "--gamma", "2.5",
            "--seed", "3",
            "--threads", threads,
            "--output", str(out),
        )
        assert code == 0
        files.append(out.read_bytes())
    assert files[0] == files[1]


def test_generate_metis_output(tmp_path, capsys):
    out = tmp_path / "g.metis"
    code, _, _ = run_cli(
        capsys,
        "generate",
        "--nodes", "200",
        "--radius", "6",
        "--alpha", "1",
        "--output", str(out),
        "--format", "metis",
    )
    assert code == 0
    first = out.read_text().splitlines()[0].split()
    assert first[0] == "200"


def test_generate_with_inline_analysis(tmp_path, capsys):
    out = tmp_path / "g.edges"
    code, stdout, _ = run_cli(
        capsys,
        "generate",
        "--nodes", "500",
        "--avg-degree", "6",
        "--gamma", "3",
        "--output", str(out),
        "--analyze",
    )
    assert code == 0
    assert "\nmean_local_clustering " in stdout
    assert "\nn 500\n" in "\n" + stdout.split("STATS")[1]


def test_analyze_subcommand(tmp_path, capsys):
    out = tmp_path / "g.edges"
    run_cli(
        capsys,
        "generate",
        "--nodes", "800",
        "--avg-degree", "8",
        "--gamma", "3",
        "--output", str(out),
    )
    report_path = tmp_path / "report.txt"
    code, stdout, _ = run_cli(
        capsys, "analyze", "--input", str(out), "--output", str(report_path)
    )
    assert code == 0
    assert stdout.startswith("n 800\n")
    assert report_path.read_text() == stdout


def test_sweep_csv_structure(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, stdout, _ = run_cli(
        capsys,
        "sweep",
        "--nodes-list", "300,600",
        "--degree-list", "6",
        "--gamma-list", "2.5,3.5",
        "--reps", "2",
        "--seed", "11",
        "--output", str(out),
    )
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    # 4 grid cells x (2 reps + 1 mean row)
    assert len(rows) == 12
    assert "wrote 12 rows" in stdout
    for name in AnalysisReport.field_names():
        assert name in rows[0]
    mean_rows = [r for r in rows if r["rep"] == "mean"]
    assert len(mean_rows) == 4
    plain = [r for r in rows if r["rep"] != "mean"]
    assert all(r["status"] == "ok" for r in plain)
    assert {r["seed"] for r in plain} == {"11", "12"}
    cell = [r for r in plain if r["n_target"] == "300" and r["gamma"] == "2.5"]
    mean = next(
        r for r in mean_rows if r["n_target"] == "300" and r["gamma"] == "2.5"
    )
    assert float(mean["m"]) == pytest.approx(
        sum(float(r["m"]) for r in cell) / len(cell)
    )


def test_bench_csv_structure(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    code, _, _ = run_cli(
        capsys,
        "bench",
        "--nodes-list", "400",
        "--degree-list", "4,8",
        "--gamma-list", "3",
        "--output", str(out),
    )
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4  # 2 cells x (1 rep + 1 mean)
    run = rows[0]
    assert int(run["t_total_ns"]) >= int(run["t_edges_ns"])
    assert float(run["edges_per_s"]) > 0


def test_infeasible_parameters_exit_one(tmp_path, capsys):
    code, stdout, stderr = run_cli(
        capsys,
        "generate",
        "--nodes", "50",
        "--avg-degree", "45",
        "--gamma", "2.1",
        "--output", str(tmp_path / "x.edges"),
    )
    assert code == 1
    assert stderr.startswith("error:")
    assert stdout == ""


def test_sweep_records_per_cell_errors(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep",
        "--nodes-list", "50,400",
        "--degree-list", "45",
        "--gamma-list", "2.1",
        "--output", str(out),
    )
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    bad = [r for r in rows if r["n_target"] == "50" and r["rep"] != "mean"]
    good = [r for r in rows if r["n_target"] == "400" and r["rep"] != "mean"]
    assert all(r["status"].startswith("error:") for r in bad)
    assert all(r["status"] == "ok" for r in good)


def test_missing_required_flag_is_an_argparse_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--nodes", "10", "--gamma", "3",
              "--output", str(tmp_path / "x")])
    assert exc.value.code == 2
