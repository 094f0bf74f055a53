# -*- coding: utf-8 -*-
"""Module with the depth-first program search over prefix-cached evaluations"""

import logging
from enum import Enum
from time import perf_counter
from typing import NamedTuple, Optional, Sequence, Tuple

from ..datagen.enumeration import candidate_calls
from ..dsl import Program, Step, steps
from ..dsl.catalog import FUNCTION_SIGNATURES, MAX_ARRAY_LENGTH, TypeTag
from ..dsl.program import InputDecl, Statement
from ..interpreter import ExampleSet, PrefixCache, run_with_cache
from .guidance import GuidanceVector


DEFAULT_CONSTANTS: Tuple[int, ...] = tuple(range(MAX_ARRAY_LENGTH + 1))


class SearchStatus(Enum):
    """Enum class describing how a search ended"""

    SOLVED = "solved"
    BUDGET_EXHAUSTED = "budget_exhausted"
    SPACE_EXHAUSTED = "space_exhausted"


class SearchBudget(NamedTuple):
    """Limits shared by all the work of one search task; None means unlimited"""

    max_candidates: Optional[int] = None
    max_seconds: Optional[float] = None


class SearchSpace(NamedTuple):
    """Programs a search may visit: up to max_length calls over the allowed steps and integer literals"""

    max_length: int
    constants: Tuple[int, ...] = DEFAULT_CONSTANTS
    allowed_steps: Optional[Tuple[Step, ...]] = None

    def steps(self) -> Tuple[Step, ...]:
        return steps() if self.allowed_steps is None else tuple(self.allowed_steps)


class SearchResult(NamedTuple):
    program: Optional[Program]
    status: SearchStatus
    candidates: int
    seconds: float
    restarts: int = 0
    active_size: Optional[int] = None

    @property
    def solved(self) -> bool:
        return self.status == SearchStatus.SOLVED


class BudgetExhausted(Exception):
    """Internal signal unwinding the recursion when the budget runs out"""


class BudgetTracker:
    """Counts evaluated candidates and watches the wall clock against a budget"""

    CLOCK_CHECK_INTERVAL = 256

    def __init__(self, budget: SearchBudget = SearchBudget()):
        self.budget = budget
        self.candidates = 0
        self.start = perf_counter()
        self._deadline = None if budget.max_seconds is None else self.start + budget.max_seconds

    def charge(self) -> None:
        """Account for one more candidate

        Raises:
            BudgetExhausted: If no candidate may be evaluated anymore

        """
        if self.budget.max_candidates is not None and self.candidates >= self.budget.max_candidates:
            raise BudgetExhausted()
        if self._deadline is not None and self.candidates % self.CLOCK_CHECK_INTERVAL == 0:
            if perf_counter() >= self._deadline:
                raise BudgetExhausted()
        self.candidates += 1

    @property
    def seconds(self) -> float:
        return perf_counter() - self.start


class DepthFirstSearch:
    """Depth-first enumeration of programs for one example set, extending prefixes in guidance order

    Each node of the search tree is a program of 1 to T calls and counts as one candidate. A node evaluates only
    its last statement, on top of the cached environments of its parent.

    """

    def __init__(self, examples: ExampleSet, space: SearchSpace, guidance: Optional[GuidanceVector] = None):
        self.examples = examples
        self.space = space
        self.guidance = guidance or GuidanceVector.uniform()
        self.ordered_steps = self.guidance.ordered_steps(space.steps())
        self._targets = examples.outputs()
        self._input_statements = [Statement(i, InputDecl(t)) for i, t in enumerate(examples.input_types)]

    def _visit(self, cache: PrefixCache, key: int, variable_types: Tuple[TypeTag, ...], tracker: BudgetTracker):
        depth = len(variable_types) - len(self._input_statements)
        for call in candidate_calls(variable_types, self.ordered_steps, self.space.constants):
            tracker.charge()
            statement = Statement(len(variable_types), call)
            values = run_with_cache(key, statement, cache)
            if values == self._targets:
                return Program(self._input_statements + cache.statements(key) + [statement])
            if depth + 1 < self.space.max_length:
                child = cache.extend(key, statement, values)
                return_type = FUNCTION_SIGNATURES[call.function].return_type
                program = self._visit(cache, child, variable_types + (return_type,), tracker)
                cache.release(child)
                if program is not None:
                    return program
        return None

    def run(self, tracker: Optional[BudgetTracker] = None) -> SearchResult:
        """Search until a consistent program is found, the space is exhausted or the budget runs out"""
        tracker = tracker or BudgetTracker()
        start_candidates, start = tracker.candidates, perf_counter()
        cache = PrefixCache()
        root = cache.seed(self.examples.inputs())
        try:
            program = self._visit(cache, root, tuple(self.examples.input_types), tracker)
            status = SearchStatus.SPACE_EXHAUSTED if program is None else SearchStatus.SOLVED
        except BudgetExhausted:
            program, status = None, SearchStatus.BUDGET_EXHAUSTED
        result = SearchResult(program, status, tracker.candidates - start_candidates, perf_counter() - start)
        logging.debug(f"Depth-first search ended with {status.value} after {result.candidates} candidates")
        return result


def dfs(
    examples: ExampleSet,
    max_length: int,
    guidance: Optional[GuidanceVector] = None,
    budget: SearchBudget = SearchBudget(),
    constants: Sequence[int] = DEFAULT_CONSTANTS,
    allowed_steps: Optional[Sequence[Step]] = None,
) -> SearchResult:
    """Find a program of at most max_length calls reproducing every example, guided by attribute probabilities

    Args:
        examples: Input-output examples to satisfy
        max_length: T, the maximum number of calls
        guidance: Attribute probabilities ordering the steps, uniform (catalog order) if None
        budget: Candidate count and/or wall time limits
        constants: Integer literals tried for int arguments after the int variables
        allowed_steps: Restrict the search to these steps, all 38 if None

    Returns:
        SearchResult with status SOLVED and a consistent program, BUDGET_EXHAUSTED or SPACE_EXHAUSTED

    Raises:
        ValueError: If max_length is below 1

    """
    if max_length < 1:
        raise ValueError(f"Program length must be at least 1, got {max_length}")
    space = SearchSpace(max_length, tuple(constants), None if allowed_steps is None else tuple(allowed_steps))
    return DepthFirstSearch(examples, space, guidance).run(BudgetTracker(budget))
