# -*- coding: utf-8 -*-
"""Module with the parameters of the attribute prediction network"""

from typing import List, Optional, Tuple

import numpy as np

from ..dsl.catalog import MAX_ARRAY_LENGTH, NUM_ATTRIBUTES
from .featurizer import EMBEDDING_ROWS, NUM_SLOTS, input_width


class ModelParams:
    """Integer embedding table, H sigmoid layers and the C x K decoder, all 64-bit floats

    Attributes:
        embedding (np.ndarray): (513, E) rows for -256..255 then Null
        layers (list): H pairs of (weights (in, K), bias (K,))
        decoder (np.ndarray): (C, K) matrix producing the attribute logits
        decoder_bias (np.ndarray): (C,)

    """

    DEFAULT_EMBEDDING_DIM = 20
    DEFAULT_HIDDEN_UNITS = 256
    DEFAULT_HIDDEN_LAYERS = 3

    def __init__(
        self,
        embedding: np.ndarray,
        layers: List[Tuple[np.ndarray, np.ndarray]],
        decoder: np.ndarray,
        decoder_bias: np.ndarray,
        max_length: int = MAX_ARRAY_LENGTH,
    ):
        self.embedding = embedding
        self.layers = [(np.asarray(w), np.asarray(b)) for w, b in layers]
        self.decoder = decoder
        self.decoder_bias = decoder_bias
        self.max_length = max_length
        self._check_shapes()

    def _check_shapes(self) -> None:
        E, K, C = self.embedding_dim, self.hidden_units, self.num_attributes
        expected_in = input_width(E, self.max_length)
        if self.embedding.shape != (EMBEDDING_ROWS, E):
            raise ValueError(f"Embedding table must be ({EMBEDDING_ROWS}, {E}), got {self.embedding.shape}")
        if not self.layers:
            raise ValueError("At least one hidden layer is required")
        for index, (weights, bias) in enumerate(self.layers):
            fan_in = expected_in if index == 0 else K
            if weights.shape != (fan_in, K) or bias.shape != (K,):
                raise ValueError(f"Hidden layer {index} must be ({fan_in}, {K}) + ({K},), got {weights.shape}")
        if self.decoder.shape != (C, K) or self.decoder_bias.shape != (C,):
            raise ValueError(f"Decoder must be ({C}, {K}) + ({C},), got {self.decoder.shape}")

    @classmethod
    def initialize(
        cls,
        embedding_dim: int = DEFAULT_EMBEDDING_DIM,
        hidden_units: int = DEFAULT_HIDDEN_UNITS,
        hidden_layers: int = DEFAULT_HIDDEN_LAYERS,
        seed: Optional[int] = 0,
        num_attributes: int = NUM_ATTRIBUTES,
        max_length: int = MAX_ARRAY_LENGTH,
    ) -> "ModelParams":
        """Random parameters: weights uniform in +-1/sqrt(fan_in), embeddings uniform in +-1, zero biases"""
        rng = np.random.default_rng(seed)
        embedding = rng.uniform(-1.0, 1.0, size=(EMBEDDING_ROWS, embedding_dim))
        layers = []
        fan_in = input_width(embedding_dim, max_length)
        for _ in range(hidden_layers):
            bound = 1.0 / np.sqrt(fan_in)
            layers.append((rng.uniform(-bound, bound, size=(fan_in, hidden_units)), np.zeros(hidden_units)))
            fan_in = hidden_units
        bound = 1.0 / np.sqrt(hidden_units)
        decoder = rng.uniform(-bound, bound, size=(num_attributes, hidden_units))
        return cls(embedding, layers, decoder, np.zeros(num_attributes), max_length)

    @property
    def embedding_dim(self) -> int:
        return self.embedding.shape[1]

    @property
    def hidden_units(self) -> int:
        return self.decoder.shape[1]

    @property
    def hidden_layers(self) -> int:
        return len(self.layers)

    @property
    def num_attributes(self) -> int:
        return self.decoder.shape[0]

    @property
    def num_slots(self) -> int:
        return NUM_SLOTS

    def arrays(self) -> List[np.ndarray]:
        """All parameter arrays in storage order: embedding, (weights, bias) per layer, decoder, decoder bias"""
        output = [self.embedding]
        for weights, bias in self.layers:
            output += [weights, bias]
        return output + [self.decoder, self.decoder_bias]

    @classmethod
    def from_arrays(cls, arrays: List[np.ndarray], max_length: int = MAX_ARRAY_LENGTH) -> "ModelParams":
        layers = list(zip(arrays[1:-2:2], arrays[2:-2:2]))
        return cls(arrays[0], layers, arrays[-2], arrays[-1], max_length)

    def copy(self) -> "ModelParams":
        return ModelParams.from_arrays([a.copy() for a in self.arrays()], self.max_length)

    def zeros_like(self) -> "ModelParams":
        return ModelParams.from_arrays([np.zeros_like(a) for a in self.arrays()], self.max_length)

    def is_finite(self) -> bool:
        return all(np.isfinite(a).all() for a in self.arrays())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelParams) or self.max_length != other.max_length:
            return False
        mine, theirs = self.arrays(), other.arrays()
        return len(mine) == len(theirs) and all(
            a.shape == b.shape and np.array_equal(a, b) for a, b in zip(mine, theirs)
        )

    def __repr__(self) -> str:
        return (
            f"ModelParams(E={self.embedding_dim}, K={self.hidden_units}, H={self.hidden_layers}, "
            f"C={self.num_attributes}, L={self.max_length})"
        )
