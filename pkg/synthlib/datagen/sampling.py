# -*- coding: utf-8 -*-
"""Module to sample input-output examples for a program from its propagated input ranges"""

import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from ..dsl.catalog import MAX_ARRAY_LENGTH, TypeTag
from ..dsl.program import Program
from ..interpreter import Example, ExampleSet, Value, evaluate, within_bounds
from .ranges import INDEX_RANGE, ValueRange, propagate_ranges


class InfeasibleProgramError(RuntimeError):
    """Custom exception raised when backward range propagation leaves no valid input for a program"""


class SamplingExhaustedError(RuntimeError):
    """Custom exception raised when no valid example is found within the retry budget"""


DEFAULT_RETRY_BUDGET = 100


def _sample_input(type_tag: TypeTag, value_range: ValueRange, rng: np.random.Generator) -> Value:
    if type_tag == TypeTag.INT:
        r = value_range.intersect(INDEX_RANGE)
        return int(rng.integers(r.lo, r.hi + 1))
    length = int(rng.integers(1, MAX_ARRAY_LENGTH + 1))
    return tuple(rng.integers(value_range.lo, value_range.hi + 1, size=length).tolist())


def sample_examples(
    program: Program,
    ranges: Optional[Sequence[ValueRange]] = None,
    count: int = ExampleSet.DEFAULT_NUM_EXAMPLES,
    rng_seed: Union[int, Sequence[int], np.random.Generator] = 0,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
) -> ExampleSet:
    """Draw examples whose every intermediate value and output stay inside the working range

    Args:
        program: Program to run
        ranges: Per-input value ranges, propagated from the program if None
        count: M, the number of examples
        rng_seed: Seed (or numpy Generator) making the draw deterministic
        retry_budget: Attempts allowed per example before giving up

    Returns:
        ExampleSet of `count` examples with non-Null outputs

    Raises:
        InfeasibleProgramError: If ranges are None and propagation finds the program infeasible
        SamplingExhaustedError: If some example cannot be drawn within the retry budget

    """
    if ranges is None:
        ranges = propagate_ranges(program)
        if ranges is None:
            raise InfeasibleProgramError(f"No valid input range for {program}")
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    examples: List[Example] = []
    while len(examples) < count:
        for _ in range(retry_budget):
            inputs = tuple(_sample_input(t, r, rng) for t, r in zip(program.input_types, ranges))
            environment = evaluate(program, inputs)
            if all(within_bounds(value) for value in environment):
                examples.append(Example(inputs, environment[-1]))
                break
        else:
            raise SamplingExhaustedError(
                f"No valid example after {retry_budget} attempts for {program} ({len(examples)}/{count} found)"
            )
    logging.debug(f"Sampled {count} examples for {program}")
    return ExampleSet(examples)
