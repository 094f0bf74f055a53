# -*- coding: utf-8 -*-
"""Applies a task function to every row of a pandas DataFrame with parallelization, error logging and progress tracking"""

import logging
import inspect

from collections import namedtuple
from concurrent.futures import Executor
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import as_completed
from enum import Enum
from time import perf_counter
from typing import Any
from typing import AnyStr
from typing import Callable
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Tuple

from more_itertools import flatten
import pandas as pd
from tqdm.auto import tqdm as tqdm_auto

from ..io_utils import generate_unique
from ..io_utils import unique_list


class ErrorHandling(Enum):
    """Enum class to identify how to handle task errors"""

    LOG = "Log"
    FAIL = "Fail"


class PoolKind(Enum):
    """Enum class to choose between worker threads and worker processes"""

    THREAD = "Thread"
    PROCESS = "Process"


OutputColumnNames = namedtuple("OutputColumnNames", ["error_message", "error_type", "error_raw"])


class TaskResultError(ValueError):
    """Custom exception raised if the task function does not return a dictionary"""


def _apply_function_with_error_logging(
    function: Callable[..., Dict],
    row: Dict,
    output_column_names: NamedTuple,
    error_handling: ErrorHandling,
    exceptions_to_catch: Tuple,
    **function_kwargs,
) -> Dict:
    """Runs the task function on one row and returns the row with result and error keys

    Module-level so that process pools can pickle it.

    """
    output = {**row, **{column: "" for column in output_column_names}}
    try:
        result = function(row=row, **function_kwargs)
        if not isinstance(result, dict):
            raise TaskResultError(f"Task function returned {type(result).__name__} instead of a dict")
        output["__result__"] = result
    except exceptions_to_catch + (TaskResultError,) as error:
        if error_handling == ErrorHandling.FAIL:
            raise error
        logging.warning(f"Function {function.__name__} failed on: {row} because of error: {error}")
        error_type = str(type(error).__qualname__)
        module = inspect.getmodule(error)
        if module:
            error_type = f"{module.__name__}.{error_type}"
        output[output_column_names.error_message] = str(error)
        output[output_column_names.error_type] = error_type
        output[output_column_names.error_raw] = str(error.args)
    return output


class TaskParallelizer:
    """Applies a task function to every row of a pandas DataFrame on a bounded worker pool.

    The function receives each row as a dictionary and returns a dictionary of result fields,
    which become prefixed output columns. Rows come back in input order whatever the completion order.

    Attributes:
        function: Function taking a `row` dict (plus keyword arguments) and returning a dict of results
        error_handling: If ErrorHandling.LOG (default), log errors as warnings and record them in error columns.
            If ErrorHandling.FAIL, the first error is raised.
        exceptions_to_catch: Tuple of Exception classes to catch. Mandatory if ErrorHandling.LOG (default).
        parallel_workers: Number of concurrent workers. With 1 worker, tasks run sequentially in-process.
        pool_kind: PoolKind.THREAD (default) or PoolKind.PROCESS. Process pools need a picklable function.
        output_column_prefix: Prefix of the output columns. Default is "output".
        verbose: If True, keep a column with the raw error arguments

    """

    DEFAULT_PARALLEL_WORKERS = 4
    DEFAULT_POOL_KIND = PoolKind.THREAD
    DEFAULT_OUTPUT_COLUMN_PREFIX = "output"
    DEFAULT_VERBOSE = False

    def __init__(
        self,
        function: Callable[..., Dict],
        error_handling: ErrorHandling = ErrorHandling.LOG,
        exceptions_to_catch: Tuple = (),
        parallel_workers: int = DEFAULT_PARALLEL_WORKERS,
        pool_kind: PoolKind = DEFAULT_POOL_KIND,
        output_column_prefix: AnyStr = DEFAULT_OUTPUT_COLUMN_PREFIX,
        verbose: bool = DEFAULT_VERBOSE,
    ):
        if error_handling == ErrorHandling.LOG and not exceptions_to_catch:
            raise ValueError("Please set at least one exception in exceptions_to_catch")
        if parallel_workers < 1:
            raise ValueError(f"Number of parallel workers must be at least 1, got {parallel_workers}")
        self.function = function
        self.error_handling = error_handling
        self.exceptions_to_catch = tuple(exceptions_to_catch)
        self.parallel_workers = parallel_workers
        self.pool_kind = pool_kind
        self.output_column_prefix = output_column_prefix
        self.verbose = verbose
        self._output_column_names = None  # Will be set at runtime by the run method

    def _get_unique_output_column_names(self, existing_names: List[AnyStr]) -> NamedTuple:
        return OutputColumnNames(
            *[
                generate_unique(name=name, existing_names=existing_names, prefix=self.output_column_prefix)
                for name in OutputColumnNames._fields
            ]
        )

    def _make_pool(self) -> Executor:
        if self.pool_kind == PoolKind.PROCESS:
            return ProcessPoolExecutor(max_workers=self.parallel_workers)
        return ThreadPoolExecutor(max_workers=self.parallel_workers)

    def _run_tasks(self, rows: List[Dict], **function_kwargs) -> List[Dict]:
        task_kwargs = dict(
            function=self.function,
            output_column_names=self._output_column_names,
            error_handling=self.error_handling,
            exceptions_to_catch=self.exceptions_to_catch,
            **function_kwargs,
        )
        progress_kwargs = dict(total=len(rows), unit="task", miniters=1, mininterval=1.0)
        if self.parallel_workers == 1:
            return [_apply_function_with_error_logging(row=row, **task_kwargs) for row in tqdm_auto(rows, **progress_kwargs)]
        with self._make_pool() as pool:
            futures = [pool.submit(_apply_function_with_error_logging, row=row, **task_kwargs) for row in rows]
            for _ in tqdm_auto(as_completed(futures), **progress_kwargs):
                pass
            return [future.result() for future in futures]

    def _post_process_results(self, df: pd.DataFrame, results: List[Dict]) -> pd.DataFrame:
        """Combines results from the function with the input dataframe"""
        result_keys = unique_list(list(flatten(row.get("__result__", {}).keys() for row in results)))
        existing_names = list(df.columns) + list(self._output_column_names)
        result_columns = {}
        for key in result_keys:
            result_columns[key] = generate_unique(key, existing_names, prefix=self.output_column_prefix)
            existing_names.append(result_columns[key])
        records = []
        for row in results:
            result = row.pop("__result__", {})
            records.append({**row, **{result_columns[key]: value for key, value in result.items()}})
        output_df = pd.DataFrame.from_records(
            records, columns=list(df.columns) + list(result_columns.values()) + list(self._output_column_names)
        )
        output_df.index = df.index
        if not self.verbose:
            output_df.drop(labels=self._output_column_names.error_raw, axis=1, inplace=True)
        if self.error_handling == ErrorHandling.FAIL:
            output_df.drop(labels=list(self._output_column_names), axis=1, inplace=True, errors="ignore")
            num_error = 0
        else:
            num_error = int((output_df[self._output_column_names.error_message] != "").sum())
        logging.info(
            f"Applying function {self.function.__name__} to {len(df.index)} row(s): "
            + f"{len(df.index) - num_error} row(s) succeeded, {num_error} failed."
        )
        return output_df

    def run(self, df: pd.DataFrame, **function_kwargs: Any) -> pd.DataFrame:
        """Applies the task function to every row of a pandas.DataFrame

        Args:
            df: Input dataframe, one task per row
            **function_kwargs: Arbitrary keyword arguments passed to the `function`

        Returns:
            Input dataframe with additional columns:
            - one per result field returned by the `function`
            - error message and error type if any

        """
        rows = [series.to_dict() for _, series in df.iterrows()]
        logging.info(
            f"Applying function {self.function.__name__} to {len(rows)} row(s) "
            + f"with {self.parallel_workers} {self.pool_kind.value.lower()} worker(s)..."
        )
        start = perf_counter()
        self._output_column_names = self._get_unique_output_column_names(existing_names=df.columns)
        for kwarg in ["function", "row", "output_column_names", "error_handling", "exceptions_to_catch"]:  # Reserved keyword arguments
            function_kwargs.pop(kwarg, None)
        results = self._run_tasks(rows, **function_kwargs)
        output_df = self._post_process_results(df, results)
        logging.info(f"Parallelization done in {(perf_counter() - start):.2f} seconds.")
        return output_df
