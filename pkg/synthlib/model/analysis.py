# -*- coding: utf-8 -*-
"""Module with model inspection tools: attribute confusion and embedding dumps"""

import logging
from typing import Sequence, Tuple

import numpy as np
import pandas as pd
from more_itertools import chunked

from ..dsl import attribute_names
from ..dsl.catalog import MAX_INT, MIN_INT
from .network import predict_batch
from .params import ModelParams


def confusion_from_predictions(probabilities: np.ndarray, targets: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Mean predicted probability of attribute j over programs with attribute i and without attribute j

    Args:
        probabilities: (N, C) predictions
        targets: (N, C) 0/1 attribute vectors

    Returns:
        Tuple of ((C, C) matrix with NaN where no program qualifies, (C, C) support counts)

    """
    targets = np.asarray(targets, dtype=np.float64)
    support = targets.T @ (1.0 - targets)
    totals = targets.T @ ((1.0 - targets) * probabilities)
    with np.errstate(invalid="ignore", divide="ignore"):
        values = np.where(support > 0, totals / np.where(support > 0, support, 1.0), np.nan)
    return values, support.astype(np.int64)


def confusion_matrix(params: ModelParams, records: Sequence, batch_size: int = 256) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """Confusion between attributes on a test dataset, as (values, support) DataFrames indexed by attribute names

    Raises:
        ValueError: If records is empty

    """
    if not records:
        raise ValueError("Cannot compute a confusion matrix on an empty dataset")
    probabilities = np.concatenate(
        [predict_batch([record.examples for record in chunk], params) for chunk in chunked(records, batch_size)]
    )
    targets = np.array([record.attributes.to_list() for record in records], dtype=np.float64)
    values, support = confusion_from_predictions(probabilities, targets)
    names = attribute_names()
    logging.info(f"Computed attribute confusion on {len(records)} records, {int((support > 0).sum())} defined cells")
    return pd.DataFrame(values, index=names, columns=names), pd.DataFrame(support, index=names, columns=names)


def dump_embeddings(params: ModelParams) -> pd.DataFrame:
    """Embedding table with one row per integer -256..255 then one row for Null"""
    index = pd.Index([str(v) for v in range(MIN_INT, MAX_INT + 1)] + ["null"], name="value")
    columns = [f"e{k}" for k in range(params.embedding_dim)]
    return pd.DataFrame(params.embedding.copy(), index=index, columns=columns)
