# -*- coding: utf-8 -*-
"""Module with the Sort-and-add search: exhaustive search over a growing set of most probable attributes"""

import logging
from time import perf_counter
from typing import NamedTuple, Optional, Sequence, Tuple

from ..dsl import Step, steps
from ..dsl.catalog import NUM_ATTRIBUTES
from ..interpreter import ExampleSet
from .dfs import (
    DEFAULT_CONSTANTS,
    BudgetTracker,
    DepthFirstSearch,
    SearchBudget,
    SearchResult,
    SearchSpace,
    SearchStatus,
)
from .guidance import GuidanceVector


class SortAndAddSchedule(NamedTuple):
    """Active-set size of the first run, and how many attributes each restart adds"""

    initial_size: int = 1
    increment: int = 1

    def sizes(self):
        """Successive active-set sizes, ending at the full attribute set"""
        if self.initial_size < 1 or self.increment < 1:
            raise ValueError(f"Schedule sizes must be positive, got {self}")
        size = min(self.initial_size, NUM_ATTRIBUTES)
        while size < NUM_ATTRIBUTES:
            yield size
            size += self.increment
        yield NUM_ATTRIBUTES


def active_steps(active_attributes: Sequence[int]) -> Tuple[Step, ...]:
    """Steps whose function (and lambda, for higher-order functions) are all active"""
    active = set(active_attributes)
    return tuple(step for step in steps() if active.issuperset(step.attribute_indices))


def sort_and_add(
    examples: ExampleSet,
    max_length: int,
    guidance: GuidanceVector,
    schedule: SortAndAddSchedule = SortAndAddSchedule(),
    budget: SearchBudget = SearchBudget(),
    constants: Sequence[int] = DEFAULT_CONSTANTS,
) -> SearchResult:
    """Run depth-first search restricted to the most probable attributes, growing the set after each failure

    Attributes are sorted by descending guidance probability, ties by catalog order. Every restart explores the
    restricted space from scratch. Restarts whose active set enables no new step are skipped: they would repeat
    the previous search exactly. The budget is shared by all restarts.

    Args:
        examples: Input-output examples to satisfy
        max_length: T, the maximum number of calls
        guidance: Attribute probabilities
        schedule: Initial active-set size and increment per restart
        budget: Candidate count and/or wall time limits over the whole run
        constants: Integer literals tried for int arguments

    Returns:
        SearchResult whose `active_size` is C_A, the active-set size at success (or when the run stopped)

    Raises:
        ValueError: If max_length is below 1 or the schedule is not positive

    """
    if max_length < 1:
        raise ValueError(f"Program length must be at least 1, got {max_length}")
    start = perf_counter()
    tracker = BudgetTracker(budget)
    order = guidance.ordered_attributes()
    previous_steps: Optional[Tuple[Step, ...]] = None
    runs, size = 0, 0
    status = SearchStatus.SPACE_EXHAUSTED
    program = None
    for size in schedule.sizes():
        allowed = active_steps(order[:size])
        if not allowed or allowed == previous_steps:
            continue
        previous_steps = allowed
        runs += 1
        space = SearchSpace(max_length, tuple(constants), allowed)
        result = DepthFirstSearch(examples, space, guidance).run(tracker)
        logging.debug(f"Sort-and-add with {size} active attributes: {result.status.value}")
        if result.status != SearchStatus.SPACE_EXHAUSTED:
            status, program = result.status, result.program
            break
    return SearchResult(
        program=program,
        status=status,
        candidates=tracker.candidates,
        seconds=perf_counter() - start,
        restarts=max(runs - 1, 0),
        active_size=size,
    )
