# -*- coding: utf-8 -*-
# This is a test file intended to be used with pytest
# pytest automatically runs all the function starting with "test_"
# see https://docs.pytest.org for more information

from itertools import islice

import pytest

from synthlib.dsl import TypeTag, attribute_vector, parse_program
from synthlib.interpreter import Example, ExampleSet, consistent
from synthlib.search import (
    DEFAULT_CONSTANTS,
    GuidanceVector,
    SearchBudget,
    SearchStatus,
    SortAndAddSchedule,
    count_search_space,
    dfs,
    measure_throughput,
    required_active_size,
    sort_and_add,
)
from synthlib.search.throughput import UNREACHABLE_OUTPUT, preorder_programs, synthetic_task


# ==============================================================================
# CONSTANT DEFINITION
# ==============================================================================

LIST, INT = TypeTag.LIST, TypeTag.INT

SORT_REVERSE = parse_program("a <- [int]\nb <- SORT a\nc <- REVERSE b")
SORT_REVERSE_EXAMPLES = ExampleSet(
    [
        Example(((3, 1, 2),), (3, 2, 1)),
        Example(((5, -4, 9, 0),), (9, 5, 0, -4)),
        Example(((2, 8),), (8, 2)),
    ]
)

FILTER_MAP_SORT_REVERSE = parse_program("a <- [int]\nb <- FILTER (<0) a\nc <- MAP (*4) b\nd <- SORT c\ne <- REVERSE d")
NEGATIVES_EXAMPLES = ExampleSet(
    [
        Example(((-17, -3, 4, 11, 0, -5, -9, 13, 6, 6, -8, 11),), (-12, -20, -32, -36, -68)),
        Example(((-3, 5, -7, 2),), (-12, -28)),
        Example(((1, 2, 3),), ()),
    ]
)

SMALL_CONSTANTS = (0, 1)


# ==============================================================================
# TESTS
# ==============================================================================


class TestDepthFirstSearch:
    @pytest.mark.parametrize(
        "inputs, max_length",
        [(((4, -2, 7),), 1), (((4, -2, 7),), 2), ((3, (4, -2, 7)), 1), (((1, 2), (4, -2, 7)), 1)],
    )
    def test_exhausts_exactly_the_search_space(self, inputs, max_length, brute_force_count):
        examples = ExampleSet([Example(inputs, UNREACHABLE_OUTPUT)])
        result = dfs(examples, max_length, constants=DEFAULT_CONSTANTS)
        assert result.status == SearchStatus.SPACE_EXHAUSTED
        assert result.program is None
        assert result.candidates == brute_force_count(examples.input_types, max_length, DEFAULT_CONSTANTS)
        assert result.candidates == count_search_space(examples.input_types, max_length, DEFAULT_CONSTANTS)

    def test_small_constant_pool(self, brute_force_count):
        examples = ExampleSet([Example(((4, -2, 7),), UNREACHABLE_OUTPUT)])
        result = dfs(examples, 2, constants=SMALL_CONSTANTS)
        assert result.candidates == brute_force_count(examples.input_types, 2, SMALL_CONSTANTS)

    def test_solves_with_oracle_guidance(self):
        oracle = GuidanceVector.oracle(attribute_vector(SORT_REVERSE))
        guided = dfs(SORT_REVERSE_EXAMPLES, 2, oracle)
        assert guided.solved
        assert consistent(guided.program, SORT_REVERSE_EXAMPLES)
        unguided = dfs(SORT_REVERSE_EXAMPLES, 2)
        assert unguided.solved
        assert guided.candidates < unguided.candidates

    def test_integer_literal(self):
        examples = ExampleSet([Example(((4, 5, 6, 7),), (4, 5)), Example(((1, 2, 3),), (1, 2))])
        result = dfs(examples, 1)
        assert result.solved
        assert consistent(result.program, examples)

    def test_candidate_budget(self):
        result = dfs(NEGATIVES_EXAMPLES, 4, budget=SearchBudget(max_candidates=50))
        assert result.status == SearchStatus.BUDGET_EXHAUSTED
        assert result.candidates == 50
        assert not result.solved

    def test_time_budget(self):
        result = dfs(NEGATIVES_EXAMPLES, 4, budget=SearchBudget(max_seconds=0.0))
        assert result.status == SearchStatus.BUDGET_EXHAUSTED

    def test_invalid_length(self):
        with pytest.raises(ValueError):
            dfs(NEGATIVES_EXAMPLES, 0)


class TestSortAndAdd:
    def test_oracle_guidance(self):
        target = attribute_vector(FILTER_MAP_SORT_REVERSE)
        oracle = GuidanceVector.oracle(target)
        result = sort_and_add(NEGATIVES_EXAMPLES, 4, oracle)
        assert result.solved
        assert consistent(result.program, NEGATIVES_EXAMPLES)
        assert result.active_size == target.count == 6
        assert result.active_size == required_active_size(target, oracle).active_size
        # active sets {REVERSE}, {REVERSE, SORT}, then MAP (*4), then FILTER (<0); lambda-less growth is skipped
        assert result.restarts == 3

    def test_shared_budget(self):
        oracle = GuidanceVector.oracle(attribute_vector(FILTER_MAP_SORT_REVERSE))
        result = sort_and_add(NEGATIVES_EXAMPLES, 4, oracle, budget=SearchBudget(max_candidates=10))
        assert result.status == SearchStatus.BUDGET_EXHAUSTED
        assert result.candidates == 10

    def test_exhausts_every_active_set(self):
        examples = ExampleSet([Example(((4, -2, 7),), UNREACHABLE_OUTPUT)])
        result = sort_and_add(examples, 1, GuidanceVector.uniform(), SortAndAddSchedule(10, 10), constants=())
        assert result.status == SearchStatus.SPACE_EXHAUSTED
        assert result.active_size == 34

    @pytest.mark.parametrize(
        "schedule, sizes",
        [
            (SortAndAddSchedule(), list(range(1, 35))),
            (SortAndAddSchedule(10, 10), [10, 20, 30, 34]),
            (SortAndAddSchedule(40, 1), [34]),
        ],
    )
    def test_schedule_sizes(self, schedule, sizes):
        assert list(schedule.sizes()) == sizes

    def test_invalid_schedule(self):
        with pytest.raises(ValueError):
            list(SortAndAddSchedule(0, 1).sizes())


def test_synthetic_task():
    examples = synthetic_task(seed=1)
    assert len(examples) == 5
    assert examples.input_types == (LIST,)
    assert all(len(example.inputs[0]) == 20 for example in examples)


def test_measure_throughput():
    report = measure_throughput(max_length=2, duration=0.2)
    assert report.cached_rate > 0
    assert report.naive_rate > 0
    assert report.max_length == 2


def test_prefix_cache_at_least_doubles_throughput():
    report = measure_throughput(max_length=3, duration=1.0)
    assert report.ratio >= 2.0


def test_preorder_programs_follow_search_order():
    programs = list(islice(preorder_programs((LIST,), 2), 3))
    assert [program.length for program in programs] == [1, 2, 2]
    assert programs[1].statements[:2] == programs[0].statements
    assert sum(1 for _ in preorder_programs((LIST,), 2, constants=SMALL_CONSTANTS)) == count_search_space(
        (LIST,), 2, SMALL_CONSTANTS
    )
