# -*- coding: utf-8 -*-
"""Module with the forward pass, the loss and its exact gradient

Every example goes through the embedding and H sigmoid layers on its own. The last hidden layer is averaged over
the examples of a set, then decoded into one logit per attribute. Hidden values are sorted along the example axis
before averaging, so the pooled vector does not depend on example order even in the last bit.
"""

from typing import Iterable, List, NamedTuple, Optional, Tuple

import numpy as np
import pandas as pd

from ..dsl import AttributeVector, attribute_names
from ..dsl.catalog import MAX_INPUTS
from ..interpreter import Example, ExampleSet
from .featurizer import INPUT_TYPE_WIDTH, ExampleFeaturizer, FeaturizedBatch
from .params import ModelParams

LOG_EPSILON = np.log(1e-12)


def sigmoid(x: np.ndarray) -> np.ndarray:
    return np.exp(-np.logaddexp(0.0, -x))


class ForwardCache(NamedTuple):
    batch: FeaturizedBatch
    activations: List[np.ndarray]  # layer inputs then hidden outputs, each (N, M, width)
    pooled: np.ndarray  # (N, K)
    logits: np.ndarray  # (N, C)


class Prediction:
    """Marginal probability of each attribute, in catalog order"""

    def __init__(self, probabilities: np.ndarray):
        self.probabilities = np.asarray(probabilities, dtype=np.float64)

    def as_series(self) -> pd.Series:
        return pd.Series(self.probabilities, index=attribute_names(), name="probability")

    def __len__(self) -> int:
        return len(self.probabilities)

    def __getitem__(self, index: int) -> float:
        return float(self.probabilities[index])

    def __repr__(self) -> str:
        return f"Prediction({self.as_series().round(3).to_dict()})"


def _assemble_inputs(batch: FeaturizedBatch, params: ModelParams) -> np.ndarray:
    """Layer input (N, M, 4*L*E + 11): per slot, the type marks then the L embedded positions"""
    N, M, slots, L = batch.indices.shape
    embedded = params.embedding[batch.indices].reshape(N, M, slots, L * params.embedding_dim)
    pieces = []
    for slot in range(slots):
        start = slot * INPUT_TYPE_WIDTH
        end = start + INPUT_TYPE_WIDTH if slot < MAX_INPUTS else batch.types.shape[-1]
        pieces += [batch.types[..., start:end], embedded[..., slot, :]]
    return np.concatenate(pieces, axis=-1)


def _embedding_gradient(d_inputs: np.ndarray, batch: FeaturizedBatch, params: ModelParams) -> np.ndarray:
    N, M, slots, L = batch.indices.shape
    width = L * params.embedding_dim
    d_embedded = []
    offset = 0
    for slot in range(slots):
        offset += INPUT_TYPE_WIDTH if slot < MAX_INPUTS else batch.types.shape[-1] - MAX_INPUTS * INPUT_TYPE_WIDTH
        d_embedded.append(d_inputs[..., offset:offset + width])
        offset += width
    d_embedded = np.stack(d_embedded, axis=2).reshape(-1, params.embedding_dim)
    gradient = np.zeros_like(params.embedding)
    np.add.at(gradient, batch.indices.reshape(-1), d_embedded)
    return gradient


def forward(batch: FeaturizedBatch, params: ModelParams) -> ForwardCache:
    activations = [_assemble_inputs(batch, params)]
    for weights, bias in params.layers:
        activations.append(sigmoid(activations[-1] @ weights + bias))
    pooled = np.sort(activations[-1], axis=1).mean(axis=1)
    logits = pooled @ params.decoder.T + params.decoder_bias
    return ForwardCache(batch, activations, pooled, logits)


def _clamped_log_likelihoods(logits: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """log p and log(1 - p), each clamped below at log(1e-12)"""
    return np.maximum(-np.logaddexp(0.0, -logits), LOG_EPSILON), np.maximum(-np.logaddexp(0.0, logits), LOG_EPSILON)


def loss_from_logits(logits: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Summed binary cross-entropy per row"""
    log_p, log_not_p = _clamped_log_likelihoods(logits)
    return -(targets * log_p + (1.0 - targets) * log_not_p).sum(axis=-1)


def backward(cache: ForwardCache, targets: np.ndarray, params: ModelParams) -> ModelParams:
    """Gradients of the mean batch loss with respect to every parameter"""
    N, M = cache.batch.indices.shape[:2]
    logits = cache.logits
    probabilities = sigmoid(logits)
    # a clamped log term is constant, its derivative vanishes
    positive_active = -np.logaddexp(0.0, -logits) > LOG_EPSILON
    negative_active = -np.logaddexp(0.0, logits) > LOG_EPSILON
    d_logits = (
        -targets * (1.0 - probabilities) * positive_active + (1.0 - targets) * probabilities * negative_active
    ) / N
    d_decoder = d_logits.T @ cache.pooled
    d_decoder_bias = d_logits.sum(axis=0)
    d_hidden = np.broadcast_to((d_logits @ params.decoder)[:, None, :] / M, cache.activations[-1].shape)
    layer_gradients = []
    for index in range(len(params.layers) - 1, -1, -1):
        weights, _ = params.layers[index]
        output = cache.activations[index + 1]
        layer_input = cache.activations[index]
        d_z = d_hidden * output * (1.0 - output)
        d_z_flat = d_z.reshape(-1, d_z.shape[-1])
        layer_gradients.append((layer_input.reshape(-1, layer_input.shape[-1]).T @ d_z_flat, d_z_flat.sum(axis=0)))
        d_hidden = d_z @ weights.T
    d_embedding = _embedding_gradient(d_hidden, cache.batch, params)
    return ModelParams(d_embedding, layer_gradients[::-1], d_decoder, d_decoder_bias, params.max_length)


def batch_loss_and_gradient(batch: FeaturizedBatch, targets: np.ndarray, params: ModelParams) -> Tuple[float, ModelParams]:
    """Mean loss of a featurized batch and its exact gradient"""
    cache = forward(batch, params)
    return float(loss_from_logits(cache.logits, targets).mean()), backward(cache, targets, params)


def encode_example(example: Example, params: ModelParams) -> np.ndarray:
    """Last hidden layer (K,) for one example

    Raises:
        EncodingRangeError: If an integer is outside [-256, 255] or an array is longer than L

    """
    indices, types = ExampleFeaturizer(params.max_length).featurize_example(example)
    cache = forward(FeaturizedBatch(indices[None, None], types[None, None]), params)
    return cache.activations[-1][0, 0]


def encode_set(examples: ExampleSet, params: ModelParams) -> np.ndarray:
    """Pooled representation (K,) of an example set: the mean of its example encodings"""
    batch = ExampleFeaturizer(params.max_length).featurize([examples])
    return forward(batch, params).pooled[0]


def predict_batch(example_sets: Iterable[ExampleSet], params: ModelParams) -> np.ndarray:
    """Attribute probabilities (N, C) for example sets sharing one size M"""
    batch = ExampleFeaturizer(params.max_length).featurize(example_sets)
    return sigmoid(forward(batch, params).logits)


def predict(examples: ExampleSet, params: ModelParams) -> Prediction:
    return Prediction(predict_batch([examples], params)[0])


def loss(prediction: Prediction, target: AttributeVector) -> float:
    """Summed binary cross-entropy over the attributes, logs clamped at 1e-12"""
    probabilities = prediction.probabilities
    targets = np.asarray(target.to_list(), dtype=np.float64)
    if probabilities.shape != targets.shape:
        raise ValueError(f"Prediction has {len(probabilities)} entries, target has {len(targets)}")
    log_p = np.log(np.maximum(probabilities, 1e-12))
    log_not_p = np.log(np.maximum(1.0 - probabilities, 1e-12))
    return float(-(targets * log_p + (1.0 - targets) * log_not_p).sum())


def grad(
    batch: Iterable[Tuple[ExampleSet, AttributeVector]], params: ModelParams, featurizer: Optional[ExampleFeaturizer] = None
) -> Tuple[float, ModelParams]:
    """Mean loss over (example set, target attributes) pairs and its exact gradient

    Raises:
        ValueError: If the batch is empty

    """
    batch = list(batch)
    if not batch:
        raise ValueError("Cannot compute gradients on an empty batch")
    featurizer = featurizer or ExampleFeaturizer(params.max_length)
    featurized = featurizer.featurize(examples for examples, _ in batch)
    targets = np.array([target.to_list() for _, target in batch], dtype=np.float64)
    return batch_loss_and_gradient(featurized, targets, params)
