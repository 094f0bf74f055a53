# -*- coding: utf-8 -*-
"""Module with read/write utility functions for versioned synthlib files"""

import logging
import functools
from typing import Any, AnyStr, Callable, Dict, Iterable, List, Tuple
from time import perf_counter

import pandas as pd
import regex as re
from more_itertools import unique_everseen


FILE_FORMAT_VERSION = 1
HEADER_PREFIX = "# synthlib"
MAX_NAME_SUFFIX = 1000


class FileFormatError(ValueError):
    """Custom exception raised when a synthlib file has a missing or incompatible header"""


def unique_list(sequence: Iterable) -> List:
    """Distinct values of a sequence, in order of first appearance"""
    return list(unique_everseen(sequence))


def generate_unique(name: AnyStr, existing_names: List[AnyStr], prefix: AnyStr = None) -> AnyStr:
    """Column name for `name` that collides with none of `existing_names`

    Non-word characters become underscores. On collision a counter is appended (solved, solved_1, solved_2...).
    """
    base = "_".join(filter(None, [prefix, re.sub(r"\W", "_", name)]))
    candidates = (base if index == 0 else f"{base}_{index}" for index in range(MAX_NAME_SUFFIX + 1))
    try:
        return next(candidate for candidate in candidates if candidate not in existing_names)
    except StopIteration:
        raise RuntimeError(f"Failed to generate a unique name for '{name}'")


def format_header(kind: AnyStr, **fields) -> AnyStr:
    """Render the comment line stamped at the top of every file written by synthlib

    Args:
        kind: File kind, e.g. "dataset", "prior", "training-log"
        **fields: Generation parameters to record, e.g. T=3, seed=7

    Returns:
        Header line without trailing newline, e.g. "# synthlib dataset version=1 T=3 seed=7"

    """
    parts = [HEADER_PREFIX, kind, f"version={FILE_FORMAT_VERSION}"]
    parts += [f"{key}={value}" for key, value in fields.items()]
    return " ".join(parts)


def _parse_field(raw: AnyStr) -> Any:
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            pass
    return raw


def parse_header(line: AnyStr, kind: AnyStr) -> Dict[AnyStr, Any]:
    """Parse and check a header line produced by `format_header`

    Args:
        line: First line of the file
        kind: Expected file kind

    Returns:
        Dictionary of header fields, numbers cast to int or float

    Raises:
        FileFormatError: If the line is not a synthlib header of the expected kind and version

    """
    tokens = line.strip().split()
    if len(tokens) < 4 or " ".join(tokens[:2]) != HEADER_PREFIX:
        raise FileFormatError(f"Missing synthlib header, got: '{line.strip()[:80]}'")
    if tokens[2] != kind:
        raise FileFormatError(f"Expected a '{kind}' file, got a '{tokens[2]}' file")
    fields = {}
    for token in tokens[3:]:
        key, _, value = token.partition("=")
        fields[key] = _parse_field(value)
    if fields.get("version") != FILE_FORMAT_VERSION:
        raise FileFormatError(f"Unsupported {kind} file version: {fields.get('version')}")
    return fields


def write_csv(df: pd.DataFrame, path: AnyStr, kind: AnyStr, index: bool = False, **fields) -> None:
    """Write a pandas.DataFrame as CSV preceded by a synthlib header line

    Floats are written with 17 significant digits so that they read back bit for bit.

    """
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(format_header(kind, **fields) + "\n")
        df.to_csv(file, index=index, float_format="%.17g")


def read_csv(path: AnyStr, kind: AnyStr, **read_kwargs) -> Tuple[Dict[AnyStr, Any], pd.DataFrame]:
    """Read a CSV file written by `write_csv`

    Returns:
        Tuple of (header fields, pandas.DataFrame)

    """
    read_kwargs.setdefault("float_precision", "round_trip")
    with open(path, "r", encoding="utf-8") as file:
        fields = parse_header(file.readline(), kind)
        df = pd.read_csv(file, **read_kwargs)
    return fields, df


def time_logging(log_message: AnyStr):
    """Decorator logging the start of a step and its wall-clock duration"""

    def decorate(function: Callable):
        @functools.wraps(function)
        def timed(*args, **kwargs):
            start = perf_counter()
            logging.info(f"{log_message}...")
            try:
                return function(*args, **kwargs)
            finally:
                logging.info(f"{log_message}: done in {perf_counter() - start:.2f} seconds")

        return timed

    return decorate
