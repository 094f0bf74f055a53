# -*- coding: utf-8 -*-
"""Module to turn per-task benchmark costs into timeout-to-solve tables and speedups"""

import logging
import math
from typing import AnyStr, Dict, Optional, Sequence

import numpy as np
import pandas as pd

from ..datagen import DatasetRecord
from ..io_utils import write_csv
from ..model import ModelParams
from ..search import DEFAULT_CONSTANTS, SearchBudget
from .benchmark import Strategy, run_benchmark, tasks_from_records

METRICS = ("candidates", "seconds")
SEARCHES = ("dfs", "saa")


def timeout_to_solve(costs: Sequence[float], percentage: float) -> float:
    """Smallest per-task budget under which at least `percentage` % of the tasks are solved

    Args:
        costs: Cost of each task, infinite for unsolved tasks
        percentage: Share of tasks to solve, in (0, 100]

    Returns:
        The k-th smallest cost with k = ceil(percentage * P / 100), infinite when not enough tasks are solved

    """
    if not 0 < percentage <= 100:
        raise ValueError(f"Percentage must lie in (0, 100], got {percentage}")
    if len(costs) == 0:
        return math.inf
    k = math.ceil(percentage * len(costs) / 100)
    return float(sorted(costs)[k - 1])


def _ratio(baseline: float, model: float) -> float:
    if math.isinf(baseline) and math.isinf(model):
        return math.nan
    if model == 0:
        return math.inf if baseline > 0 else math.nan
    return baseline / model


class SpeedupReport:
    """Timeout-to-solve values per strategy and the speedup of model guidance over the prior

    Rows of the flat table mirror a baseline/model/speedup layout for each search procedure,
    with one column per percentage of solved tasks.

    Attributes:
        results: Output of `run_benchmark`
        percentages: Shares of solved tasks reported

    """

    DEFAULT_PERCENTAGES = (20, 40, 60)

    def __init__(self, results: pd.DataFrame, percentages: Sequence[float] = DEFAULT_PERCENTAGES):
        self.results = results
        self.percentages = tuple(percentages)
        self.num_tasks = int(results["task_id"].nunique()) if len(results.index) else 0

    def costs(self, strategy: Strategy, metric: AnyStr) -> np.ndarray:
        rows = self.results[self.results["strategy"] == Strategy(strategy).value]
        return np.where(rows["solved"].to_numpy(dtype=bool), rows[metric].to_numpy(dtype=np.float64), np.inf)

    def strategies(self):
        return [s for s in Strategy if (self.results["strategy"] == s.value).any()]

    def timeouts(self, metric: AnyStr = "candidates") -> pd.DataFrame:
        """DataFrame indexed by strategy with one column per percentage"""
        if metric not in METRICS:
            raise ValueError(f"Unknown metric {metric}, expected one of {METRICS}")
        table = {
            strategy.value: [timeout_to_solve(self.costs(strategy, metric), q) for q in self.percentages]
            for strategy in self.strategies()
        }
        return pd.DataFrame.from_dict(table, orient="index", columns=[f"{q:g}%" for q in self.percentages])

    def speedups(self, metric: AnyStr = "candidates") -> pd.DataFrame:
        """Prior-guided timeout divided by model-guided timeout, per search procedure present in both variants"""
        timeouts = self.timeouts(metric)
        rows = {}
        for search in SEARCHES:
            baseline, model = f"prior-{search}", search
            if baseline in timeouts.index and model in timeouts.index:
                rows[search] = [_ratio(b, m) for b, m in zip(timeouts.loc[baseline], timeouts.loc[model])]
        return pd.DataFrame.from_dict(rows, orient="index", columns=list(timeouts.columns))

    def solved_fraction(self) -> pd.Series:
        return self.results.groupby("strategy")["solved"].mean()

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for metric in METRICS:
            timeouts, speedups = self.timeouts(metric), self.speedups(metric)
            for search in SEARCHES:
                for row, label, table in [
                    (f"prior-{search}", "baseline", timeouts),
                    (search, "model", timeouts),
                    (search, "speedup", speedups),
                ]:
                    if row in table.index:
                        rows.append({"metric": metric, "search": search, "row": label, **table.loc[row].to_dict()})
        return pd.DataFrame(rows)

    def to_text(self) -> AnyStr:
        frame = self.to_frame()
        if frame.empty:
            return "No strategy results"
        return frame.set_index(["metric", "search", "row"]).to_string(float_format=lambda v: f"{v:,.3f}")

    def save(self, path: AnyStr, **fields) -> None:
        write_csv(self.to_frame(), path, "speedup-report", P=self.num_tasks, **fields)
        logging.info(f"Speedup report on {self.num_tasks} tasks written to {path}")


def run_generalization_grid(
    models_by_length: Dict[int, ModelParams],
    tests_by_length: Dict[int, Sequence[DatasetRecord]],
    prior: np.ndarray,
    budget: SearchBudget = SearchBudget(),
    percentage: float = 20,
    workers: Optional[int] = None,
    constants: Sequence[int] = DEFAULT_CONSTANTS,
) -> pd.DataFrame:
    """Sort-and-add speedup on candidate counts for models trained at one length and tested at another

    The prior-guided baseline of a test length is run once and shared by all models.

    Returns:
        DataFrame indexed by training length (T_train) with one column per test length (T_test)

    """
    grid = pd.DataFrame(
        index=pd.Index(sorted(models_by_length), name="T_train"),
        columns=pd.Index(sorted(tests_by_length), name="T_test"),
        dtype=np.float64,
    )
    for test_length in grid.columns:
        tasks = tasks_from_records(tests_by_length[test_length])
        baseline = run_benchmark(tasks, [Strategy.PRIOR_SAA], test_length, budget, prior=prior, workers=workers,
                                 constants=constants)
        for train_length in grid.index:
            guided = run_benchmark(tasks, [Strategy.SAA], test_length, budget, params=models_by_length[train_length],
                                   workers=workers, constants=constants)
            report = SpeedupReport(pd.concat([baseline, guided], ignore_index=True), [percentage])
            grid.loc[train_length, test_length] = report.speedups("candidates").loc["saa"].iloc[0]
            logging.info(f"Generalization T_train={train_length}, T_test={test_length}: "
                         + f"speedup {grid.loc[train_length, test_length]:.2f}")
    return grid
