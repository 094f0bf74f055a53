# -*- coding: utf-8 -*-
"""Module to turn example sets into the integer arrays the encoder consumes

Each example becomes 3 input slots and 1 output slot. A slot holds a type one-hot (int, array, absent for inputs;
int, array for the output) and L embedding indices: integers map to value + 256, padding and absent slots map to
the Null row 512. A scalar occupies the first position of its slot.
"""

from typing import Iterable, NamedTuple, Sequence, Tuple

import numpy as np

from ..dsl.catalog import MAX_ARRAY_LENGTH, MAX_INPUTS, MAX_INT, MIN_INT, TypeTag
from ..interpreter import Example, ExampleSet, Value

NUM_VALUES = MAX_INT - MIN_INT + 1
NULL_INDEX = NUM_VALUES
EMBEDDING_ROWS = NUM_VALUES + 1
NUM_SLOTS = MAX_INPUTS + 1
INPUT_TYPE_WIDTH = 3
OUTPUT_TYPE_WIDTH = 2
TYPE_WIDTH = MAX_INPUTS * INPUT_TYPE_WIDTH + OUTPUT_TYPE_WIDTH
TYPE_CODES = {TypeTag.INT: 0, TypeTag.LIST: 1}
ABSENT_CODE = 2


class EncodingRangeError(ValueError):
    """Custom exception raised when an example holds an integer or an array the embedding cannot represent"""


def input_width(embedding_dim: int, max_length: int = MAX_ARRAY_LENGTH) -> int:
    """Width of the first hidden layer input: 4 * L * E + 11"""
    return NUM_SLOTS * max_length * embedding_dim + TYPE_WIDTH


def embedding_row(value: int) -> int:
    if not MIN_INT <= value <= MAX_INT:
        raise EncodingRangeError(f"Integer {value} lies outside [{MIN_INT}, {MAX_INT}]")
    return value - MIN_INT


class FeaturizedBatch(NamedTuple):
    indices: np.ndarray  # (N, M, 4, L) embedding rows
    types: np.ndarray  # (N, M, 11) one-hot type marks

    def __len__(self) -> int:
        return self.indices.shape[0]

    def take(self, rows: Sequence[int]) -> "FeaturizedBatch":
        rows = np.asarray(rows, dtype=np.int64)
        return FeaturizedBatch(self.indices[rows], self.types[rows])


class ExampleFeaturizer:
    """Encodes examples into embedding indices and type marks, all example sets of a batch sharing one size M"""

    def __init__(self, max_length: int = MAX_ARRAY_LENGTH):
        self.max_length = max_length

    def _fill_slot(self, value: Value, indices: np.ndarray) -> None:
        if isinstance(value, tuple):
            if len(value) > self.max_length:
                raise EncodingRangeError(f"Array of length {len(value)} exceeds the maximum length {self.max_length}")
            for position, element in enumerate(value):
                indices[position] = embedding_row(element)
        else:
            indices[0] = embedding_row(value)

    def featurize_example(self, example: Example) -> Tuple[np.ndarray, np.ndarray]:
        """Embedding indices (4, L) and type marks (11,) of one example"""
        if len(example.inputs) > MAX_INPUTS:
            raise EncodingRangeError(f"Examples have at most {MAX_INPUTS} inputs, got {len(example.inputs)}")
        indices = np.full((NUM_SLOTS, self.max_length), NULL_INDEX, dtype=np.int64)
        types = np.zeros(TYPE_WIDTH, dtype=np.float64)
        for slot in range(MAX_INPUTS):
            if slot < len(example.inputs):
                value = example.inputs[slot]
                if value is None:
                    raise EncodingRangeError(f"Input {slot} is Null")
                self._fill_slot(value, indices[slot])
                types[slot * INPUT_TYPE_WIDTH + TYPE_CODES[example.input_types[slot]]] = 1.0
            else:
                types[slot * INPUT_TYPE_WIDTH + ABSENT_CODE] = 1.0
        if example.output is None:
            raise EncodingRangeError("Output is Null")
        self._fill_slot(example.output, indices[MAX_INPUTS])
        types[MAX_INPUTS * INPUT_TYPE_WIDTH + TYPE_CODES[example.output_type]] = 1.0
        return indices, types

    def featurize(self, example_sets: Iterable[ExampleSet]) -> FeaturizedBatch:
        """Stack example sets into arrays of shape (N, M, 4, L) and (N, M, 11)

        Raises:
            EncodingRangeError: On out-of-range integers, over-long arrays, or example sets of different sizes

        """
        all_indices, all_types = [], []
        for example_set in example_sets:
            pairs = [self.featurize_example(example) for example in example_set]
            if all_indices and len(pairs) != all_indices[0].shape[0]:
                raise EncodingRangeError("All example sets of a batch must hold the same number of examples")
            all_indices.append(np.stack([p[0] for p in pairs]))
            all_types.append(np.stack([p[1] for p in pairs]))
        if not all_indices:
            raise EncodingRangeError("Cannot featurize an empty batch")
        return FeaturizedBatch(np.stack(all_indices), np.stack(all_types))
