# -*- coding: utf-8 -*-
"""Module relating attribute rankings to the cost of Sort-and-add"""

from typing import NamedTuple, Sequence

import numpy as np

from ..datagen.enumeration import InputSignature, count_programs
from ..dsl import AttributeVector
from ..dsl.catalog import NUM_ATTRIBUTES
from .dfs import DEFAULT_CONSTANTS
from .guidance import GuidanceVector


def rank_loss(target: AttributeVector, scores: GuidanceVector) -> int:
    """Number of (relevant, irrelevant) attribute pairs where the relevant one scores strictly lower"""
    relevant = np.array(target.to_list(), dtype=bool)
    probabilities = scores.probabilities
    if len(relevant) != len(probabilities):
        raise ValueError(f"Target has {len(relevant)} attributes, scores have {len(probabilities)}")
    return int((probabilities[relevant][:, None] < probabilities[~relevant][None, :]).sum())


class ActiveSetSize(NamedTuple):
    active_size: int
    relevant_count: int

    @property
    def redundant_count(self) -> int:
        """D, the irrelevant attributes activated before the last relevant one"""
        return self.active_size - self.relevant_count


def required_active_size(target: AttributeVector, scores: GuidanceVector) -> ActiveSetSize:
    """C_A for Sort-and-add with increment 1: the 1-based sorted position of the last relevant attribute"""
    positions = {attribute: rank for rank, attribute in enumerate(scores.ordered_attributes(), start=1)}
    relevant = target.indices()
    return ActiveSetSize(max((positions[i] for i in relevant), default=0), len(relevant))


class BoundCheck(NamedTuple):
    """Sizes of Sort-and-add work against plain search, as exact integers"""

    cumulative_work: int  # 1^T + 2^T + ... + C_A^T
    active_bound: int  # C_A^(T+1)
    full_bound: int  # C * C_A^T

    @property
    def holds(self) -> bool:
        return self.cumulative_work <= self.active_bound <= self.full_bound


def bound_check(max_length: int, relevant_count: int, redundant_count: int, num_attributes: int = NUM_ATTRIBUTES) -> BoundCheck:
    """Evaluate the bounds on the total work of Sort-and-add runs with active sets of size 1 to C_A = C_P + D

    Raises:
        ValueError: If T < 1, C_P < 1, D < 0 or C_A exceeds the number of attributes
        ArithmeticError: If the inequalities do not hold

    """
    active_size = relevant_count + redundant_count
    if max_length < 1 or relevant_count < 1 or redundant_count < 0 or active_size > num_attributes:
        raise ValueError(f"Invalid bound parameters T={max_length}, C_P={relevant_count}, D={redundant_count}")
    check = BoundCheck(
        cumulative_work=sum(c ** max_length for c in range(1, active_size + 1)),
        active_bound=active_size ** (max_length + 1),
        full_bound=num_attributes * active_size ** max_length,
    )
    if not check.holds:
        raise ArithmeticError(f"Bounds violated for T={max_length}, C_A={active_size}: {check}")
    return check


def count_search_space(
    signature: InputSignature, max_length: int, constants: Sequence[int] = DEFAULT_CONSTANTS
) -> int:
    """Number of programs a depth-first search visits when it exhausts its space"""
    return count_programs(signature, max_length, constants=constants)
