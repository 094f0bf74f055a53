# -*- coding: utf-8 -*-
"""Module with guidance vectors: attribute probabilities that order the search"""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..dsl import AttributeVector, Step, attribute_names, steps
from ..dsl.catalog import NUM_ATTRIBUTES


class GuidanceVector:
    """34 probabilities in catalog order, from a model prediction or a prior file

    All orderings are descending by probability, ties broken by catalog order.

    """

    def __init__(self, probabilities: Iterable[float]):
        probabilities = np.asarray(list(probabilities), dtype=np.float64)
        if probabilities.shape != (NUM_ATTRIBUTES,):
            raise ValueError(f"Guidance needs {NUM_ATTRIBUTES} probabilities, got {probabilities.shape}")
        if not np.all((probabilities >= 0.0) & (probabilities <= 1.0)):
            raise ValueError("Guidance probabilities must lie in [0, 1]")
        self.probabilities = probabilities
        self.probabilities.setflags(write=False)

    @classmethod
    def uniform(cls, value: float = 0.5) -> "GuidanceVector":
        return cls(np.full(NUM_ATTRIBUTES, value))

    @classmethod
    def oracle(cls, target: AttributeVector) -> "GuidanceVector":
        """Probability 1 on the given attributes and 0 elsewhere"""
        return cls(np.array(target.to_list(), dtype=np.float64))

    def step_score(self, step: Step) -> float:
        """Composite probability of a step: the minimum over its function and its lambda"""
        return float(min(self.probabilities[i] for i in step.attribute_indices))

    def ordered_steps(self, allowed_steps: Optional[Sequence[Step]] = None) -> Tuple[Step, ...]:
        """Steps by descending composite probability, ties by catalog order"""
        allowed_steps = steps() if allowed_steps is None else allowed_steps
        position = {step: index for index, step in enumerate(steps())}
        return tuple(sorted(allowed_steps, key=lambda step: (-self.step_score(step), position[step])))

    def ordered_attributes(self) -> List[int]:
        """Attribute indices by descending probability, ties by catalog order"""
        return sorted(range(NUM_ATTRIBUTES), key=lambda i: (-self.probabilities[i], i))

    def __eq__(self, other) -> bool:
        return isinstance(other, GuidanceVector) and np.array_equal(self.probabilities, other.probabilities)

    def __hash__(self) -> int:
        return hash(self.probabilities.tobytes())

    def __repr__(self) -> str:
        top = self.ordered_attributes()[:5]
        names = attribute_names()
        return f"GuidanceVector(top={[(names[i], round(float(self.probabilities[i]), 3)) for i in top]})"
