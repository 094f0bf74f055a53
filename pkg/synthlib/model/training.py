# -*- coding: utf-8 -*-
"""Module to train the attribute prediction network with minibatch Adam and early stopping"""

import logging
from dataclasses import dataclass
from time import perf_counter
from typing import AnyStr, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from more_itertools import chunked
from tqdm.auto import tqdm as tqdm_auto

from ..config import SynthConfig
from ..io_utils import read_csv, write_csv
from .featurizer import ExampleFeaturizer, FeaturizedBatch
from .network import batch_loss_and_gradient, forward, loss_from_logits
from .params import ModelParams


class TrainingDivergedError(RuntimeError):
    """Custom exception raised when the training loss becomes NaN or infinite"""


@dataclass
class TrainConfig:
    """Training hyper-parameters, validated on creation"""

    learning_rate: float = 1e-3
    batch_size: int = 32
    epochs: int = 50
    seed: int = 0
    validation_fraction: float = 0.1
    patience: int = 5
    embedding_dim: int = ModelParams.DEFAULT_EMBEDDING_DIM
    hidden_units: int = ModelParams.DEFAULT_HIDDEN_UNITS
    hidden_layers: int = ModelParams.DEFAULT_HIDDEN_LAYERS

    def __post_init__(self):
        positive = [{"type": "sup", "op": 0}]
        SynthConfig(
            learning_rate={"value": self.learning_rate, "checks": [{"type": "finite"}, *positive], "cast_to": float},
            batch_size={"value": self.batch_size, "checks": positive, "cast_to": int},
            epochs={"value": self.epochs, "checks": [{"type": "sup_eq", "op": 0}], "cast_to": int},
            seed={"value": self.seed, "cast_to": int, "required": True},
            validation_fraction={"value": self.validation_fraction, "checks": [{"type": "between", "op": (0, 0.9)}]},
            patience={"value": self.patience, "checks": positive, "cast_to": int},
            embedding_dim={"value": self.embedding_dim, "checks": positive, "cast_to": int},
            hidden_units={"value": self.hidden_units, "checks": positive, "cast_to": int},
            hidden_layers={"value": self.hidden_layers, "checks": positive, "cast_to": int},
        )


class Adam:
    """Adam optimiser keeping first and second moment estimates for every parameter array"""

    DEFAULT_BETA1 = 0.9
    DEFAULT_BETA2 = 0.999
    DEFAULT_EPSILON = 1e-8

    def __init__(
        self,
        params: ModelParams,
        learning_rate: float = 1e-3,
        beta1: float = DEFAULT_BETA1,
        beta2: float = DEFAULT_BETA2,
        epsilon: float = DEFAULT_EPSILON,
    ):
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.step_count = 0
        self._first = [np.zeros_like(a) for a in params.arrays()]
        self._second = [np.zeros_like(a) for a in params.arrays()]

    def step(self, params: ModelParams, gradients: ModelParams) -> None:
        """Update params in place"""
        self.step_count += 1
        correction1 = 1.0 - self.beta1 ** self.step_count
        correction2 = 1.0 - self.beta2 ** self.step_count
        for array, gradient, first, second in zip(params.arrays(), gradients.arrays(), self._first, self._second):
            first *= self.beta1
            first += (1.0 - self.beta1) * gradient
            second *= self.beta2
            second += (1.0 - self.beta2) * gradient * gradient
            array -= self.learning_rate * (first / correction1) / (np.sqrt(second / correction2) + self.epsilon)


class TrainingLog:
    """Per-epoch losses; epoch 0 holds the losses of the initial parameters"""

    COLUMNS = ["epoch", "train_loss", "validation_loss"]

    def __init__(self, df: Optional[pd.DataFrame] = None):
        self.df = pd.DataFrame(columns=self.COLUMNS) if df is None else df

    def append(self, epoch: int, train_loss: float, validation_loss: float) -> None:
        row = pd.DataFrame([[epoch, train_loss, validation_loss]], columns=self.COLUMNS)
        self.df = row if self.df.empty else pd.concat([self.df, row], ignore_index=True)

    def best_epoch(self) -> int:
        column = "validation_loss" if self.df["validation_loss"].notna().any() else "train_loss"
        return int(self.df.loc[self.df[column].astype(float).idxmin(), "epoch"])

    def save(self, path: AnyStr, config: Optional[TrainConfig] = None) -> None:
        fields = {} if config is None else {k: v for k, v in vars(config).items()}
        write_csv(self.df, path, "training-log", **fields)

    @classmethod
    def load(cls, path: AnyStr) -> "TrainingLog":
        _, df = read_csv(path, "training-log")
        return cls(df)

    def __len__(self) -> int:
        return len(self.df.index)


def _mean_loss(batch: FeaturizedBatch, targets: np.ndarray, params: ModelParams, batch_size: int) -> float:
    if len(batch) == 0:
        return float("nan")
    total = 0.0
    for rows in chunked(range(len(batch)), batch_size):
        total += float(loss_from_logits(forward(batch.take(rows), params).logits, targets[rows]).sum())
    return total / len(batch)


def split_validation(num_records: int, validation_fraction: float, seed: int) -> Tuple[np.ndarray, np.ndarray]:
    """Seeded (train, validation) row indices; validation is empty when it would leave no training row"""
    order = np.random.default_rng([seed, 1]).permutation(num_records)
    num_validation = int(np.ceil(validation_fraction * num_records)) if num_records > 1 else 0
    num_validation = min(num_validation, num_records - 1)
    return np.sort(order[num_validation:]), np.sort(order[:num_validation])


def train(
    records: Sequence,
    config: Optional[TrainConfig] = None,
    initial_params: Optional[ModelParams] = None,
) -> Tuple[ModelParams, TrainingLog]:
    """Fit the network on dataset records and return the parameters of the best epoch

    Args:
        records: DatasetRecord objects (anything with `examples` and `attributes`)
        config: Training hyper-parameters, defaults if None
        initial_params: Starting point, freshly initialized from the config seed if None

    Returns:
        Tuple of (parameters at the lowest validation loss, or training loss without validation split, log)

    Raises:
        ValueError: If records is empty
        TrainingDivergedError: If a minibatch loss is not finite

    """
    if not records:
        raise ValueError("Cannot train on an empty dataset")
    config = config or TrainConfig()
    start = perf_counter()
    params = initial_params.copy() if initial_params is not None else ModelParams.initialize(
        config.embedding_dim, config.hidden_units, config.hidden_layers, config.seed
    )
    featurized = ExampleFeaturizer(params.max_length).featurize(record.examples for record in records)
    targets = np.array([record.attributes.to_list() for record in records], dtype=np.float64)
    train_rows, validation_rows = split_validation(len(records), config.validation_fraction, config.seed)
    train_batch, train_targets = featurized.take(train_rows), targets[train_rows]
    validation_batch, validation_targets = featurized.take(validation_rows), targets[validation_rows]
    logging.info(
        f"Training on {len(train_rows)} records, validating on {len(validation_rows)} records, "
        + f"for up to {config.epochs} epochs..."
    )
    optimizer = Adam(params, config.learning_rate)
    rng = np.random.default_rng([config.seed, 2])
    log = TrainingLog()
    log.append(
        0,
        _mean_loss(train_batch, train_targets, params, config.batch_size),
        _mean_loss(validation_batch, validation_targets, params, config.batch_size),
    )
    initial_losses = log.df.iloc[0]
    best_loss = initial_losses["validation_loss"] if len(validation_rows) else initial_losses["train_loss"]
    best_params, epochs_without_improvement = params.copy(), 0
    for epoch in tqdm_auto(range(1, config.epochs + 1), unit="epoch", miniters=1, mininterval=1.0):
        for batch_number, rows in enumerate(chunked(rng.permutation(len(train_rows)), config.batch_size)):
            batch_loss, gradients = batch_loss_and_gradient(train_batch.take(rows), train_targets[rows], params)
            if not np.isfinite(batch_loss):
                raise TrainingDivergedError(
                    f"Loss became {batch_loss} at epoch {epoch}, batch {batch_number} "
                    + f"(learning rate {config.learning_rate}, batch size {config.batch_size})"
                )
            optimizer.step(params, gradients)
        train_loss = _mean_loss(train_batch, train_targets, params, config.batch_size)
        validation_loss = _mean_loss(validation_batch, validation_targets, params, config.batch_size)
        log.append(epoch, train_loss, validation_loss)
        logging.debug(f"Epoch {epoch}: train loss {train_loss:.4f}, validation loss {validation_loss:.4f}")
        monitored = validation_loss if len(validation_rows) else train_loss
        if monitored < best_loss:
            best_params, best_loss, epochs_without_improvement = params.copy(), monitored, 0
        else:
            epochs_without_improvement += 1
            if epochs_without_improvement >= config.patience:
                logging.info(f"Early stopping at epoch {epoch}: no improvement for {config.patience} epochs")
                break
    logging.info(
        f"Training on {len(train_rows)} records: best loss {best_loss:.4f} "
        + f"in {perf_counter() - start:.2f} seconds"
    )
    return best_params, log
