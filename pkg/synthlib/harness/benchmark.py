# -*- coding: utf-8 -*-
"""Module to run search strategies on held-out tasks and collect per-task costs"""

import logging
import os
from enum import Enum
from typing import Any, AnyStr, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
import pandas as pd

from ..datagen import DatasetBuilder, DatasetRecord, Fingerprinter, FingerprintTable
from ..dsl import Program, format_program, parse_program
from ..interpreter import ExampleSet, consistent
from ..io_utils import time_logging
from ..model import ModelParams, predict_batch
from ..parallelizer import ErrorHandling, PoolKind, TaskParallelizer
from ..search import DEFAULT_CONSTANTS, GuidanceVector, SearchBudget, SortAndAddSchedule, dfs, sort_and_add


class Strategy(Enum):
    """Enum class of the search strategies a benchmark compares: search procedure and guidance source"""

    DFS = "dfs"
    SAA = "saa"
    PRIOR_DFS = "prior-dfs"
    PRIOR_SAA = "prior-saa"

    @property
    def uses_prior(self) -> bool:
        return self in (Strategy.PRIOR_DFS, Strategy.PRIOR_SAA)

    @property
    def search(self) -> AnyStr:
        """Name of the search procedure, shared by the model-guided and prior-guided variants"""
        return "saa" if self in (Strategy.SAA, Strategy.PRIOR_SAA) else "dfs"


class OverlappingTasksError(ValueError):
    """Custom exception raised when a test program is equivalent to a training program"""


class BenchmarkTask(NamedTuple):
    """One search task; the program is the held-out ground truth and never reaches the solver"""

    task_id: int
    examples: ExampleSet
    program: Program


def tasks_from_records(records: Sequence[DatasetRecord], max_tasks: Optional[int] = None) -> List[BenchmarkTask]:
    records = records if max_tasks is None else records[:max_tasks]
    return [BenchmarkTask(task_id, record.examples, record.program) for task_id, record in enumerate(records)]


def check_disjoint(
    train_records: Sequence[DatasetRecord],
    test_records: Sequence[DatasetRecord],
    fingerprinter: Optional[Fingerprinter] = None,
) -> None:
    """Check that no test program shares its fingerprint with a training program

    Raises:
        OverlappingTasksError: If the fingerprint intersection is not empty

    """
    fingerprinter = fingerprinter or Fingerprinter()
    table = FingerprintTable()
    for record in train_records:
        table.insert_if_absent(fingerprinter.fingerprint(record.program))
    overlapping = [i for i, record in enumerate(test_records) if fingerprinter.fingerprint(record.program) in table]
    if overlapping:
        raise OverlappingTasksError(
            f"{len(overlapping)} test program(s) are equivalent to training programs, e.g. task {overlapping[0]}"
        )
    logging.info(f"Checked {len(test_records)} test programs against {len(table)} training fingerprints: disjoint")


def generate_test_records(
    builder: DatasetBuilder,
    count: int,
    train_records: Sequence[DatasetRecord] = (),
    fingerprinter: Optional[Fingerprinter] = None,
) -> List[DatasetRecord]:
    """Generate `count` fresh test records, skipping programs equivalent to a training program

    Records come in the builder's shuffle order, so asking for more only appends records; the request grows by the
    number of skipped programs until enough remain.

    Raises:
        InsufficientProgramsError: If the builder runs out of programs

    """
    fingerprinter = fingerprinter or Fingerprinter()
    table = FingerprintTable()
    for record in train_records:
        table.insert_if_absent(fingerprinter.fingerprint(record.program))
    wanted, kept = count, []
    while len(kept) < count:
        records, _ = builder.generate(wanted)
        kept = [record for record in records if fingerprinter.fingerprint(record.program) not in table]
        wanted += count - len(kept)
    logging.info(f"Generated {count} test tasks, {wanted - count} skipped as equivalent to training programs")
    return kept[:count]


def solve_row(
    row: Dict[AnyStr, Any],
    tasks: Dict[int, BenchmarkTask],
    guidances: Dict[int, GuidanceVector],
    prior_guidance: Optional[GuidanceVector],
    max_length: int,
    budget: SearchBudget,
    constants: Sequence[int] = DEFAULT_CONSTANTS,
    schedule: SortAndAddSchedule = SortAndAddSchedule(),
) -> Dict[AnyStr, Any]:
    """Run one strategy on one task; module-level so that process pools can pickle it"""
    task = tasks[row["task_id"]]
    strategy = Strategy(row["strategy"])
    guidance = prior_guidance if strategy.uses_prior else guidances[task.task_id]
    if strategy.search == "saa":
        result = sort_and_add(task.examples, max_length, guidance, schedule, budget, constants)
    else:
        result = dfs(task.examples, max_length, guidance, budget, constants)
    return {
        "solved": result.solved,
        "status": result.status.value,
        "candidates": result.candidates,
        "seconds": result.seconds,
        "active_size": result.active_size if result.active_size is not None else -1,
        "restarts": result.restarts,
        "program": format_program(result.program) if result.program is not None else "",
    }


def model_guidances(tasks: Sequence[BenchmarkTask], params: ModelParams) -> Dict[int, GuidanceVector]:
    """Network predictions for every task, computed once in the calling process"""
    if not tasks:
        return {}
    probabilities = predict_batch([task.examples for task in tasks], params)
    return {task.task_id: GuidanceVector(np.clip(p, 0.0, 1.0)) for task, p in zip(tasks, probabilities)}


def _verify(results: pd.DataFrame, tasks: Dict[int, BenchmarkTask]) -> pd.DataFrame:
    """Keep a solve only if its program reproduces the task examples"""
    for index, row in results[results["solved"]].iterrows():
        if not consistent(parse_program(row["program"]), tasks[row["task_id"]].examples):
            logging.warning(f"Discarding inconsistent solution of task {row['task_id']} by {row['strategy']}")
            results.at[index, "solved"] = False
    return results


@time_logging("Running benchmark")
def run_benchmark(
    tasks: Sequence[BenchmarkTask],
    strategies: Sequence[Strategy],
    max_length: int,
    budget: SearchBudget = SearchBudget(),
    params: Optional[ModelParams] = None,
    prior: Optional[np.ndarray] = None,
    workers: Optional[int] = None,
    constants: Sequence[int] = DEFAULT_CONSTANTS,
    schedule: SortAndAddSchedule = SortAndAddSchedule(),
) -> pd.DataFrame:
    """Solve every task with every strategy on a bounded worker pool

    Args:
        tasks: Benchmark tasks
        strategies: Strategies to run on every task
        max_length: T, the maximum program length searched
        budget: Per-task budget, shared by the restarts of Sort-and-add
        params: Network parameters, required by model-guided strategies
        prior: Attribute frequencies, required by prior-guided strategies
        workers: Number of worker processes, all available CPUs if None. With 1, tasks run in-process.
        constants: Integer literals tried for int arguments
        schedule: Sort-and-add active-set schedule

    Returns:
        DataFrame with one row per (task, strategy) in task-id then strategy order, and columns
        task_id, strategy, solved, status, candidates, seconds, active_size, restarts, program, error_message

    Raises:
        ValueError: If a strategy lacks its guidance source

    """
    strategies = [Strategy(s) for s in strategies]
    if any(not s.uses_prior for s in strategies) and params is None:
        raise ValueError("Model-guided strategies need model parameters")
    if any(s.uses_prior for s in strategies) and prior is None:
        raise ValueError("Prior-guided strategies need a prior")
    workers = workers or os.cpu_count() or 1
    guidances = model_guidances(tasks, params) if params is not None else {}
    prior_guidance = GuidanceVector(prior) if prior is not None else None
    df = pd.DataFrame(
        [(task.task_id, strategy.value) for task in tasks for strategy in strategies], columns=["task_id", "strategy"]
    )
    parallelizer = TaskParallelizer(
        function=solve_row,
        exceptions_to_catch=(ValueError, RuntimeError, ArithmeticError),
        error_handling=ErrorHandling.LOG,
        parallel_workers=workers,
        pool_kind=PoolKind.PROCESS if workers > 1 else PoolKind.THREAD,
        output_column_prefix="result",
    )
    output = parallelizer.run(
        df,
        tasks={task.task_id: task for task in tasks},
        guidances=guidances,
        prior_guidance=prior_guidance,
        max_length=max_length,
        budget=budget,
        constants=tuple(constants),
        schedule=schedule,
    )
    output.columns = [c[len("result_"):] if c.startswith("result_") else c for c in output.columns]
    defaults = {"solved": False, "status": "failed", "candidates": np.nan, "seconds": np.nan, "program": ""}
    for column, value in defaults.items():
        if column not in output.columns:
            output[column] = value
    output = output.fillna(value={"solved": False, "status": "failed", "program": ""})
    output["solved"] = output["solved"].astype(bool)
    return _verify(output, {task.task_id: task for task in tasks})
