# -*- coding: utf-8 -*-
"""Command-line entry point: synthlib gen | train | solve | bench | confusion | dump-embeddings"""

import argparse
import json
import logging
import platform
import sys
from pathlib import Path
from typing import AnyStr, Dict, List, Optional, Sequence

import numpy as np

from ..config import SynthConfig, SynthParameterError
from ..datagen import (
    DatasetBuilder,
    InsufficientProgramsError,
    InvalidRecordError,
    build_dataset,
    read_dataset,
    read_prior,
)
from ..dsl import MAX_ARRAY_LENGTH, NUM_ATTRIBUTES, format_program
from ..interpreter import ExampleSet, InputSignatureError, consistent
from ..io_utils import FileFormatError, write_csv
from ..model import (
    TrainConfig,
    TrainingDivergedError,
    WeightsFileError,
    confusion_matrix,
    dump_embeddings,
    load_params,
    predict,
    save_params,
    train,
)
from ..search import GuidanceVector, SearchBudget, dfs, measure_throughput, sort_and_add
from .benchmark import (
    OverlappingTasksError,
    Strategy,
    check_disjoint,
    generate_test_records,
    run_benchmark,
    tasks_from_records,
)
from .report import SpeedupReport, run_generalization_grid

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_SOLUTION = 2

STRATEGIES = [s.value for s in Strategy]
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class UsageError(ValueError):
    """Custom exception raised on malformed command lines, so that they exit with the configuration status"""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _budget_params(args: argparse.Namespace) -> Dict:
    return dict(
        budget_candidates={"value": args.budget_candidates, "cast_to": int, "checks": [{"type": "sup", "op": 0}]},
        budget_seconds={"value": args.budget_seconds, "cast_to": float, "checks": [{"type": "sup", "op": 0}]},
    )


def _budget(config: SynthConfig) -> SearchBudget:
    return SearchBudget(max_candidates=config.budget_candidates, max_seconds=config.budget_seconds)


def _existing_path(value) -> Dict:
    return {"value": value, "required": True, "checks": [{"type": "path_exists"}]}


def _output_path(value) -> Dict:
    return {"value": value, "required": True, "checks": [{"type": "parent_exists"}]}


def _length_param(value, required: bool = True, default: Optional[int] = None) -> Dict:
    return {
        "value": value,
        "required": required,
        "default": default,
        "cast_to": int,
        "checks": [{"type": "between", "op": (1, MAX_ARRAY_LENGTH)}],
    }


def _length_pairs(values: Optional[Sequence[AnyStr]], flag: AnyStr) -> Dict[int, AnyStr]:
    """Parse repeated T=path flags"""
    pairs = {}
    for value in values or []:
        length, separator, path = value.partition("=")
        if not separator or not length.strip().isdigit():
            raise UsageError(f"{flag} expects T=path, got {value!r}")
        if not Path(path).exists():
            raise UsageError(f"{flag}: file does not exist: {path}")
        pairs[int(length)] = path
    return pairs


def cmd_gen(args: argparse.Namespace) -> int:
    config = SynthConfig(
        length=_length_param(args.length),
        count={"value": args.count, "required": True, "cast_to": int, "checks": [{"type": "sup", "op": 0}]},
        examples={"value": args.examples, "default": DatasetBuilder.DEFAULT_NUM_EXAMPLES, "cast_to": int,
                  "checks": [{"type": "sup", "op": 0}]},
        seed={"value": args.seed, "default": 0, "cast_to": int},
        out=_output_path(args.out),
        prior={"value": args.prior, "default": f"{args.out}.prior.csv"},
        test_count={"value": args.test_count, "default": 0, "cast_to": int, "checks": [{"type": "sup_eq", "op": 0}]},
        test_out={"value": args.test_out, "default": f"{args.out}.test.jsonl"},
    )
    prior = build_dataset(
        length=config.length,
        count=config.count,
        seed=config.seed,
        output_path=config.out,
        prior_path=config.prior,
        test_count=config.test_count,
        test_path=config.test_out if config.test_count > 0 else None,
        num_examples=config.examples,
    )
    print(f"Wrote {config.count} records to {config.out} and the prior of {len(prior)} attributes to {config.prior}")
    return EXIT_OK


def cmd_train(args: argparse.Namespace) -> int:
    config = SynthConfig(
        dataset=_existing_path(args.dataset),
        out=_output_path(args.out),
        log={"value": args.log, "default": f"{args.out}.log.csv"},
    )
    train_config = TrainConfig(
        **{
            field: value
            for field, value in dict(
                learning_rate=args.learning_rate,
                batch_size=args.batch_size,
                epochs=args.epochs,
                seed=args.seed,
                validation_fraction=args.validation_fraction,
                patience=args.patience,
                embedding_dim=args.embedding_dim,
                hidden_units=args.hidden_units,
                hidden_layers=args.hidden_layers,
            ).items()
            if value is not None
        }
    )
    _, records = read_dataset(config.dataset)
    params, log = train(records, train_config)
    save_params(params, config.out)
    log.save(config.log, train_config)
    best = log.df.loc[log.df["epoch"] == log.best_epoch()].iloc[0]
    print(
        f"Best epoch {int(best['epoch'])}: validation loss {float(best['validation_loss']):.4f} "
        + f"(constant predictor {NUM_ATTRIBUTES * np.log(2):.4f}); model written to {config.out}"
    )
    return EXIT_OK


def _read_examples(args: argparse.Namespace) -> ExampleSet:
    if args.examples_file and args.io:
        raise UsageError("Use either --examples-file or --io, not both")
    if not args.examples_file and not args.io:
        raise UsageError("Examples are required: pass --examples-file or at least one --io")
    try:
        if args.examples_file:
            with open(args.examples_file, "r", encoding="utf-8") as file:
                objs = json.load(file)
        else:
            objs = [json.loads(value) for value in args.io]
        return ExampleSet.from_json(objs)
    except (KeyError, TypeError, ValueError) as error:
        raise UsageError(f"Malformed examples: {error}")


def _guidance(strategy: Strategy, examples: ExampleSet, model: Optional[AnyStr], prior: Optional[AnyStr]):
    if strategy.uses_prior:
        if prior is None:
            raise UsageError(f"Strategy {strategy.value} needs --prior")
        return GuidanceVector(read_prior(prior))
    if model is None:
        raise UsageError(f"Strategy {strategy.value} needs --model")
    return GuidanceVector(np.clip(predict(examples, load_params(model)).probabilities, 0.0, 1.0))


def cmd_solve(args: argparse.Namespace) -> int:
    config = SynthConfig(
        strategy={"value": args.strategy, "default": Strategy.SAA.value, "checks": [{"type": "in", "op": STRATEGIES}]},
        length=_length_param(args.length, default=3),
        model={"value": args.model, "checks": [{"type": "path_exists"}]},
        prior={"value": args.prior, "checks": [{"type": "path_exists"}]},
        **_budget_params(args),
    )
    strategy = Strategy(config.strategy)
    examples = _read_examples(args)
    guidance = _guidance(strategy, examples, config.model, config.prior)
    if strategy.search == "saa":
        result = sort_and_add(examples, config.length, guidance, budget=_budget(config))
    else:
        result = dfs(examples, config.length, guidance, budget=_budget(config))
    stats = f"strategy={strategy.value} status={result.status.value} candidates={result.candidates} " + (
        f"seconds={result.seconds:.3f}"
    )
    if strategy.search == "saa":
        stats += f" active_size={result.active_size} restarts={result.restarts}"
    if not result.solved or not consistent(result.program, examples):
        print(f"No solution within budget ({stats})")
        return EXIT_NO_SOLUTION
    print(format_program(result.program))
    print(f"# {stats}")
    return EXIT_OK


def _bench_grid(args: argparse.Namespace, config: SynthConfig) -> int:
    models = {length: load_params(path) for length, path in _length_pairs(args.grid_model, "--grid-model").items()}
    tests = {length: read_dataset(path)[1][: config.count]
             for length, path in _length_pairs(args.grid_test, "--grid-test").items()}
    if not models or not tests:
        raise UsageError("The generalization grid needs at least one --grid-model and one --grid-test")
    grid = run_generalization_grid(models, tests, read_prior(config.prior), _budget(config), workers=config.workers)
    write_csv(grid, config.out, "generalization-grid", index=True, P=config.count)
    print(grid.to_string(float_format=lambda v: f"{v:,.3f}"))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    config = SynthConfig(
        prior=_existing_path(args.prior),
        out=_output_path(args.out),
        count={"value": args.count, "default": 100, "cast_to": int, "checks": [{"type": "sup", "op": 0}]},
        workers={"value": args.workers, "cast_to": int, "checks": [{"type": "sup", "op": 0}]},
        strategy={"value": args.strategy, "default": STRATEGIES, "checks": [{"type": "is_subset", "op": STRATEGIES}]},
        seed={"value": args.seed, "default": 0, "cast_to": int},
        **_budget_params(args),
    )
    if args.grid_model or args.grid_test:
        return _bench_grid(args, config)
    config.add_param("dataset", args.dataset, checks=[{"type": "path_exists"}])
    config.add_param("train_dataset", args.train_dataset, checks=[{"type": "path_exists"}])
    config.add_param("model", args.model, checks=[{"type": "path_exists"}])
    strategies = [Strategy(s) for s in config.strategy]
    if any(not s.uses_prior for s in strategies) and config.model is None:
        raise UsageError("Model-guided strategies need --model")
    train_records = read_dataset(config.train_dataset)[1] if config.train_dataset is not None else []
    if config.dataset is not None:
        fields, test_records = read_dataset(config.dataset)
        config.add_param("length", **_length_param(args.length, default=fields.get("T")))
        check_disjoint(train_records, test_records)
    else:
        config.add_param("length", **_length_param(args.length))
        builder = DatasetBuilder(length=config.length, seed=config.seed)
        test_records = generate_test_records(builder, config.count, train_records)
    tasks = tasks_from_records(test_records, config.count)
    results = run_benchmark(
        tasks,
        strategies,
        config.length,
        _budget(config),
        params=load_params(config.model) if config.model is not None else None,
        prior=read_prior(config.prior),
        workers=config.workers,
    )
    header = {"T": config.length, "seed": config.seed, "budget_candidates": config.budget_candidates}
    if args.throughput:
        measured = measure_throughput()
        header.update(cached_rate=round(measured.cached_rate), naive_rate=round(measured.naive_rate),
                      machine=platform.machine() or "unknown")
    report = SpeedupReport(results)
    report.save(config.out, **header)
    if args.results_out:
        write_csv(results, args.results_out, "benchmark-results", **header)
    print(report.to_text())
    return EXIT_OK


def cmd_confusion(args: argparse.Namespace) -> int:
    config = SynthConfig(
        model=_existing_path(args.model), dataset=_existing_path(args.dataset), out=_output_path(args.out)
    )
    _, records = read_dataset(config.dataset)
    values, support = confusion_matrix(load_params(config.model), records)
    support_path = str(Path(config.out).with_suffix("")) + ".support.csv"
    write_csv(values, config.out, "confusion", index=True, N=len(records))
    write_csv(support, support_path, "confusion-support", index=True, N=len(records))
    print(f"Confusion matrix written to {config.out}, support counts to {support_path}")
    return EXIT_OK


def cmd_dump_embeddings(args: argparse.Namespace) -> int:
    config = SynthConfig(model=_existing_path(args.model), out=_output_path(args.out))
    params = load_params(config.model)
    write_csv(dump_embeddings(params), config.out, "embeddings", index=True, E=params.embedding_dim)
    print(f"Embeddings of {params.embedding.shape[0]} values written to {config.out}")
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="synthlib", description="Learning-guided program synthesis over a list DSL")
    parser.add_argument("--log-level", default="INFO", choices=LOG_LEVELS)
    subparsers = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    subparsers.required = True

    gen = subparsers.add_parser("gen", help="Generate a dataset of programs with examples and its prior")
    gen.add_argument("--length", "-T", type=int, help="Number of calls of every program")
    gen.add_argument("--count", "-N", type=int, help="Number of training records")
    gen.add_argument("--examples", "-M", type=int, help="Examples per record (default 5)")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", help="Dataset file")
    gen.add_argument("--prior", help="Prior file (default <out>.prior.csv)")
    gen.add_argument("--test-count", type=int, help="Held-out records, disjoint from the training programs")
    gen.add_argument("--test-out", help="Held-out dataset file (default <out>.test.jsonl)")
    gen.set_defaults(handler=cmd_gen)

    train_parser = subparsers.add_parser("train", help="Train the attribute predictor on a dataset")
    train_parser.add_argument("--dataset", help="Training dataset file")
    train_parser.add_argument("--out", help="Weights file")
    train_parser.add_argument("--log", help="Training log CSV (default <out>.log.csv)")
    train_parser.add_argument("--seed", type=int)
    train_parser.add_argument("--epochs", type=int)
    train_parser.add_argument("--batch-size", type=int)
    train_parser.add_argument("--learning-rate", type=float)
    train_parser.add_argument("--validation-fraction", type=float)
    train_parser.add_argument("--patience", type=int)
    train_parser.add_argument("--embedding-dim", type=int)
    train_parser.add_argument("--hidden-units", type=int)
    train_parser.add_argument("--hidden-layers", type=int)
    train_parser.set_defaults(handler=cmd_train)

    solve = subparsers.add_parser("solve", help="Search a program consistent with input-output examples")
    solve.add_argument("--examples-file", help='JSON list of {"inputs": [...], "output": ...}')
    solve.add_argument("--io", action="append", help='One example as JSON, repeatable')
    solve.add_argument("--model")
    solve.add_argument("--prior")
    solve.add_argument("--strategy", choices=STRATEGIES)
    solve.add_argument("--length", "-T", type=int, help="Maximum program length (default 3)")
    solve.add_argument("--budget-candidates", type=int)
    solve.add_argument("--budget-seconds", type=float)
    solve.set_defaults(handler=cmd_solve)

    bench = subparsers.add_parser("bench", help="Compare strategies on held-out tasks")
    bench.add_argument("--dataset", help="Test dataset file; without it, -P fresh tasks of length -T are generated")
    bench.add_argument("--train-dataset", help="Training dataset the test tasks must be disjoint from")
    bench.add_argument("--model")
    bench.add_argument("--prior")
    bench.add_argument("--strategy", action="append", choices=STRATEGIES, help="Repeatable, all four by default")
    bench.add_argument("--length", "-T", type=int, help="Maximum program length (default: T of the test dataset)")
    bench.add_argument("--count", "-P", type=int, help="Number of test tasks (default 100)")
    bench.add_argument("--budget-candidates", type=int)
    bench.add_argument("--budget-seconds", type=float)
    bench.add_argument("--workers", type=int, help="Worker processes (default: all CPUs)")
    bench.add_argument("--seed", type=int, help="Seed of generated test tasks (default 0)")
    bench.add_argument("--out", help="Speedup report CSV, or grid CSV with --grid-model")
    bench.add_argument("--results-out", help="Per-task results CSV")
    bench.add_argument("--throughput", action="store_true", help="Record search throughput in the report header")
    bench.add_argument("--grid-model", action="append", metavar="T=PATH", help="Model trained on length T")
    bench.add_argument("--grid-test", action="append", metavar="T=PATH", help="Test dataset of length T")
    bench.set_defaults(handler=cmd_bench)

    confusion = subparsers.add_parser("confusion", help="Attribute confusion matrix of a model on a dataset")
    confusion.add_argument("--model")
    confusion.add_argument("--dataset")
    confusion.add_argument("--out")
    confusion.set_defaults(handler=cmd_confusion)

    embeddings = subparsers.add_parser("dump-embeddings", help="Write the learned integer embeddings")
    embeddings.add_argument("--model")
    embeddings.add_argument("--out")
    embeddings.set_defaults(handler=cmd_dump_embeddings)
    return parser


def main(argv: Optional[List[AnyStr]] = None) -> int:
    """Run one subcommand and return its exit status: 0 done, 2 no solution within budget, 1 usage error"""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        print(error, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s %(message)s")
    try:
        return args.handler(args)
    except (
        UsageError,
        SynthParameterError,
        FileFormatError,
        WeightsFileError,
        InputSignatureError,
        InsufficientProgramsError,
        InvalidRecordError,
        OverlappingTasksError,
        TrainingDivergedError,
        OSError,
    ) as error:
        logging.error(str(error))
        print(f"Error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
