# -*- coding: utf-8 -*-
# This is a test file intended to be used with pytest
# pytest automatically runs all the function starting with "test_"
# see https://docs.pytest.org for more information

import numpy as np
import pytest

from synthlib.datagen import DatasetBuilder
from synthlib.dsl import NUM_ATTRIBUTES, AttributeVector, TypeTag, attribute_vector
from synthlib.interpreter import consistent
from synthlib.search import (
    DEFAULT_CONSTANTS,
    GuidanceVector,
    SortAndAddSchedule,
    bound_check,
    dfs,
    rank_loss,
    required_active_size,
    sort_and_add,
)


# ==============================================================================
# CONSTANT DEFINITION
# ==============================================================================

# ranking follows catalog order; relevant attributes sit at sorted positions 1 to 4, 7 and 11
WORKED_SCORES = GuidanceVector(np.linspace(1.0, 0.0, NUM_ATTRIBUTES))
WORKED_TARGET = AttributeVector.from_indices([0, 1, 2, 3, 6, 10])

ORACLE_TASK_COUNT = 100


def pairwise_rank_loss(target: AttributeVector, scores: GuidanceVector) -> int:
    relevant = target.indices()
    irrelevant = [i for i in range(NUM_ATTRIBUTES) if i not in relevant]
    return sum(1 for r in relevant for j in irrelevant if scores.probabilities[r] < scores.probabilities[j])


# ==============================================================================
# TESTS
# ==============================================================================


def test_worked_example():
    assert rank_loss(WORKED_TARGET, WORKED_SCORES) == 7
    size = required_active_size(WORKED_TARGET, WORKED_SCORES)
    assert size.active_size == 11
    assert size.relevant_count == 6
    assert size.redundant_count == 5


def test_rank_loss_against_pairwise_count():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        scores = GuidanceVector(rng.permutation(NUM_ATTRIBUTES) / NUM_ATTRIBUTES)
        target = AttributeVector(rng.random(NUM_ATTRIBUTES) < rng.uniform(0.05, 0.5))
        if target.count == 0:
            continue
        loss = rank_loss(target, scores)
        assert loss == pairwise_rank_loss(target, scores)
        assert loss >= required_active_size(target, scores).redundant_count


def test_bounds_hold_everywhere():
    for max_length in range(1, 6):
        for active_size in range(1, NUM_ATTRIBUTES + 1):
            for relevant_count in range(1, active_size + 1):
                check = bound_check(max_length, relevant_count, active_size - relevant_count)
                assert check.holds


def test_bound_values():
    check = bound_check(2, 2, 1)
    assert check == (1 + 4 + 9, 27, 34 * 9)


@pytest.mark.parametrize("args", [(0, 1, 0), (2, 0, 3), (2, 2, -1), (2, 30, 5)])
def test_bound_invalid(args):
    with pytest.raises(ValueError):
        bound_check(*args)


@pytest.mark.parametrize("signature", [(TypeTag.LIST,), (TypeTag.INT, TypeTag.LIST)])
def test_generated_records_are_resolved(signature):
    records, _ = DatasetBuilder(length=2, seed=4, input_signatures=[signature]).generate(6)
    for record in records:
        result = dfs(record.examples, 2, constants=DEFAULT_CONSTANTS)
        assert result.solved
        assert consistent(result.program, record.examples)


@pytest.mark.slow
def test_oracle_sort_and_add_active_size():
    records, _ = DatasetBuilder(length=3, seed=8, input_signatures=[(TypeTag.LIST,)]).generate(ORACLE_TASK_COUNT)
    complete = 0
    for record in records:
        oracle = GuidanceVector.oracle(record.attributes)
        rank = {attribute: position + 1 for position, attribute in enumerate(oracle.ordered_attributes())}
        result = sort_and_add(record.examples, 3, oracle, SortAndAddSchedule(1, 1), constants=DEFAULT_CONSTANTS)
        assert result.solved
        assert consistent(result.program, record.examples)
        # the set grows one attribute at a time, so it stops at the last attribute the found program needs
        found = attribute_vector(result.program)
        assert result.active_size == max(rank[attribute] for attribute in found.indices())
        assert result.active_size <= record.attributes.count
        if found == record.attributes:
            assert result.active_size == record.attributes.count
            complete += 1
    assert complete > 0
