# -*- coding: utf-8 -*-
# This is a test file intended to be used with pytest
# pytest automatically runs all the function starting with "test_"
# see https://docs.pytest.org for more information

import json

import pytest

from synthlib.harness.cli import EXIT_NO_SOLUTION, EXIT_OK, EXIT_USAGE, main
from synthlib.io_utils import read_csv


# ==============================================================================
# CONSTANT DEFINITION
# ==============================================================================

SORT_EXAMPLES = [
    json.dumps({"inputs": [[3, 1, 2]], "output": [1, 2, 3]}),
    json.dumps({"inputs": [[5, -4, 0]], "output": [-4, 0, 5]}),
]
SMALL_NETWORK_FLAGS = ["--embedding-dim", "2", "--hidden-units", "8", "--hidden-layers", "1"]


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    """Length-one dataset with a held-out split, its prior and a briefly trained model"""
    directory = tmp_path_factory.mktemp("cli")
    paths = {
        "dataset": directory / "train.jsonl",
        "prior": directory / "train.jsonl.prior.csv",
        "test": directory / "train.jsonl.test.jsonl",
        "model": directory / "model.weights",
    }
    gen_args = ["gen", "-T", "1", "-N", "24", "--seed", "3", "--out", str(paths["dataset"]), "--test-count", "4"]
    assert main(gen_args) == EXIT_OK
    train_args = ["train", "--dataset", str(paths["dataset"]), "--out", str(paths["model"]), "--epochs", "2"]
    assert main(train_args + SMALL_NETWORK_FLAGS) == EXIT_OK
    return paths


def io_flags(examples):
    return [flag for example in examples for flag in ("--io", example)]


# ==============================================================================
# TESTS
# ==============================================================================


def test_gen_writes_default_paths(workspace):
    for name in ["dataset", "prior", "test"]:
        assert workspace[name].exists()


def test_gen_is_reproducible(workspace, tmp_path):
    out = tmp_path / "again.jsonl"
    assert main(["gen", "-T", "1", "-N", "24", "--seed", "3", "--out", str(out), "--test-count", "4"]) == EXIT_OK
    assert out.read_bytes() == workspace["dataset"].read_bytes()
    assert (tmp_path / "again.jsonl.prior.csv").read_bytes() == workspace["prior"].read_bytes()
    assert (tmp_path / "again.jsonl.test.jsonl").read_bytes() == workspace["test"].read_bytes()


def test_train_writes_log(workspace):
    fields, log = read_csv(str(workspace["model"]) + ".log.csv", "training-log")
    assert fields["epochs"] == 2
    assert log["epoch"].tolist() == [0, 1, 2]


def test_solve_with_prior(workspace, capsys):
    args = ["solve", "--strategy", "prior-saa", "--prior", str(workspace["prior"]), "-T", "1"]
    assert main(args + io_flags(SORT_EXAMPLES)) == EXIT_OK
    output = capsys.readouterr().out
    assert "b <- SORT a" in output
    assert "# strategy=prior-saa status=solved" in output


def test_solve_with_model(workspace, tmp_path, capsys):
    examples_file = tmp_path / "examples.json"
    examples_file.write_text("[" + ", ".join(SORT_EXAMPLES) + "]")
    args = ["solve", "--strategy", "dfs", "--model", str(workspace["model"]), "-T", "1"]
    assert main(args + ["--examples-file", str(examples_file)]) == EXIT_OK
    assert "SORT" in capsys.readouterr().out


def test_solve_without_solution(workspace, capsys):
    unreachable = [json.dumps({"inputs": [[3, 1, 2]], "output": 1000000000})]
    args = ["solve", "--strategy", "prior-dfs", "--prior", str(workspace["prior"]), "-T", "1"]
    assert main(args + io_flags(unreachable)) == EXIT_NO_SOLUTION
    assert "No solution within budget" in capsys.readouterr().out


def test_solve_budget_exhausted(workspace):
    args = ["solve", "--strategy", "prior-dfs", "--prior", str(workspace["prior"]), "-T", "3", "--budget-candidates", "1"]
    negatives = [json.dumps({"inputs": [[-3, 5, -7, 2]], "output": [-12, -28]})]
    assert main(args + io_flags(negatives)) == EXIT_NO_SOLUTION


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["unknown-command"],
        ["solve", "--strategy", "bogus"],
        ["solve", "--strategy", "prior-saa"],
        ["solve", "--strategy", "saa", "--io", SORT_EXAMPLES[0]],
        ["solve", "--strategy", "prior-saa", "--prior", "missing.csv", "--io", SORT_EXAMPLES[0]],
        ["solve", "--budget-candidates", "0", "--io", SORT_EXAMPLES[0]],
        ["gen", "-T", "0", "-N", "5", "--out", "unused.jsonl"],
        ["gen", "-T", "1", "--out", "unused.jsonl"],
        ["gen", "-T", "1", "-N", "5", "--out", "no/such/folder/data.jsonl"],
        ["confusion", "--model", "missing.weights"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_malformed_examples(workspace):
    args = ["solve", "--strategy", "prior-saa", "--prior", str(workspace["prior"]), "--io", "{not json"]
    assert main(args) == EXIT_USAGE


def test_wrong_file_kind(workspace):
    args = ["solve", "--strategy", "prior-saa", "--prior", str(workspace["dataset"])] + io_flags(SORT_EXAMPLES)
    assert main(args) == EXIT_USAGE


def test_bench(workspace, tmp_path):
    report_path, results_path = tmp_path / "report.csv", tmp_path / "results.csv"
    args = [
        "bench",
        "--dataset", str(workspace["test"]),
        "--train-dataset", str(workspace["dataset"]),
        "--model", str(workspace["model"]),
        "--prior", str(workspace["prior"]),
        "--budget-candidates", "5000",
        "--workers", "1",
        "--out", str(report_path),
        "--results-out", str(results_path),
    ]
    assert main(args) == EXIT_OK
    fields, report = read_csv(report_path, "speedup-report")
    assert fields["T"] == 1
    assert fields["P"] == 4
    assert set(report["search"]) == {"dfs", "saa"}
    _, results = read_csv(results_path, "benchmark-results")
    assert len(results.index) == 4 * 4


def test_bench_rejects_overlapping_tasks(workspace, tmp_path):
    args = [
        "bench",
        "--dataset", str(workspace["dataset"]),
        "--train-dataset", str(workspace["dataset"]),
        "--prior", str(workspace["prior"]),
        "--strategy", "prior-dfs",
        "--workers", "1",
        "--out", str(tmp_path / "report.csv"),
    ]
    assert main(args) == EXIT_USAGE


def test_bench_generates_disjoint_tasks(workspace, tmp_path):
    report_path, results_path = tmp_path / "report.csv", tmp_path / "results.csv"
    args = [
        "bench",
        "--train-dataset", str(workspace["dataset"]),
        "--prior", str(workspace["prior"]),
        "--strategy", "prior-dfs",
        "-T", "1",
        "-P", "3",
        "--seed", "3",
        "--budget-candidates", "5000",
        "--workers", "1",
        "--out", str(report_path),
        "--results-out", str(results_path),
    ]
    assert main(args) == EXIT_OK
    fields, _ = read_csv(report_path, "speedup-report")
    assert fields["P"] == 3
    assert fields["seed"] == 3
    _, results = read_csv(results_path, "benchmark-results")
    assert sorted(results["task_id"].unique()) == [0, 1, 2]


def test_bench_without_dataset_needs_length(workspace, tmp_path):
    args = ["bench", "--prior", str(workspace["prior"]), "--strategy", "prior-dfs", "--out", str(tmp_path / "r.csv")]
    assert main(args) == EXIT_USAGE


def test_bench_grid(workspace, tmp_path):
    grid_path = tmp_path / "grid.csv"
    args = [
        "bench",
        "--prior", str(workspace["prior"]),
        "--grid-model", f"1={workspace['model']}",
        "--grid-test", f"1={workspace['test']}",
        "--budget-candidates", "5000",
        "--workers", "1",
        "--out", str(grid_path),
    ]
    assert main(args) == EXIT_OK
    _, grid = read_csv(grid_path, "generalization-grid", index_col=0)
    assert grid.shape == (1, 1)


def test_confusion(workspace, tmp_path):
    out = tmp_path / "confusion.csv"
    args = ["confusion", "--model", str(workspace["model"]), "--dataset", str(workspace["test"]), "--out", str(out)]
    assert main(args) == EXIT_OK
    fields, values = read_csv(out, "confusion", index_col=0)
    assert fields["N"] == 4
    assert values.shape == (34, 34)
    _, support = read_csv(tmp_path / "confusion.support.csv", "confusion-support", index_col=0)
    assert support.shape == (34, 34)


def test_dump_embeddings(workspace, tmp_path):
    out = tmp_path / "embeddings.csv"
    assert main(["dump-embeddings", "--model", str(workspace["model"]), "--out", str(out)]) == EXIT_OK
    fields, embeddings = read_csv(out, "embeddings", index_col=0)
    assert fields["E"] == 2
    assert embeddings.shape == (513, 2)
