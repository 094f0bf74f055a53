# -*- coding: utf-8 -*-
"""Module to measure how many candidate programs per second the search evaluates"""

import logging
from itertools import islice
from time import perf_counter
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from ..datagen.enumeration import InputSignature, candidate_calls
from ..dsl.catalog import MAX_ARRAY_LENGTH, MAX_INT, MIN_INT, steps
from ..dsl.program import Program
from ..interpreter import Example, ExampleSet, run_program
from .dfs import DEFAULT_CONSTANTS, SearchBudget, dfs

UNREACHABLE_OUTPUT = 10 ** 9
NAIVE_SAMPLE_SIZE = 50000


class ThroughputReport(NamedTuple):
    cached_rate: float
    naive_rate: float
    max_length: int
    duration: float

    @property
    def ratio(self) -> float:
        return self.cached_rate / self.naive_rate if self.naive_rate > 0 else float("inf")


def synthetic_task(seed: int = 0, num_examples: int = ExampleSet.DEFAULT_NUM_EXAMPLES) -> ExampleSet:
    """Random single-array examples with an output no short program reaches, so that search never stops early"""
    rng = np.random.default_rng(seed)
    examples = [
        Example((tuple(rng.integers(MIN_INT, MAX_INT + 1, size=MAX_ARRAY_LENGTH).tolist()),), UNREACHABLE_OUTPUT)
        for _ in range(num_examples)
    ]
    return ExampleSet(examples)


def preorder_programs(
    signature: InputSignature, max_length: int, constants: Sequence[int] = DEFAULT_CONSTANTS
) -> Iterator[Program]:
    """Every program of 1 to max_length calls, each one right before its extensions, in depth-first search order"""
    constants = tuple(constants)

    def visit(program: Program, remaining: int) -> Iterator[Program]:
        yield program
        if remaining > 0:
            for call in candidate_calls(program.variable_types, steps(), constants):
                yield from visit(program.extend(call), remaining - 1)

    for call in candidate_calls(tuple(signature), steps(), constants):
        yield from visit(Program.from_parts(signature, [call]), max_length - 1)


def _naive_rate(examples: ExampleSet, max_length: int, duration: float, sample_size: int) -> float:
    """Candidates per second when every program is run from its inputs; programs are built before timing starts"""
    programs = list(islice(preorder_programs(examples.input_types, max_length), sample_size))
    count, start = 0, perf_counter()
    for program in programs:
        for example in examples:
            run_program(program, example.inputs)
        count += 1
        if count % 256 == 0 and perf_counter() - start >= duration:
            break
    return count / max(perf_counter() - start, 1e-9)


def measure_throughput(
    max_length: int = 3, duration: float = 1.0, seed: int = 0, naive_sample_size: int = NAIVE_SAMPLE_SIZE
) -> ThroughputReport:
    """Candidates per second of prefix-cached depth-first search, against re-running every program from scratch

    Returns:
        ThroughputReport with both rates; they are measurements, not guarantees

    """
    examples = synthetic_task(seed)
    result = dfs(examples, max_length, budget=SearchBudget(max_seconds=duration))
    cached_rate = result.candidates / max(result.seconds, 1e-9)
    naive_rate = _naive_rate(examples, max_length, duration, naive_sample_size)
    report = ThroughputReport(cached_rate, naive_rate, max_length, duration)
    logging.info(
        f"Search throughput at T={max_length}: {cached_rate:,.0f} candidates/s with prefix caching, "
        + f"{naive_rate:,.0f} candidates/s without ({report.ratio:.1f}x)"
    )
    return report
