# -*- coding: utf-8 -*-
# This is a test file intended to be used with pytest
# pytest automatically runs all the function starting with "test_"
# see https://docs.pytest.org for more information

import numpy as np

from synthlib.datagen import DatasetBuilder
from synthlib.dsl import NUM_ATTRIBUTES, attribute_names
from synthlib.model import ModelParams, confusion_from_predictions, confusion_matrix, dump_embeddings


def test_confusion_from_predictions():
    probabilities = np.array([[0.9, 0.2], [0.1, 0.8], [0.7, 0.4]])
    targets = np.array([[1, 0], [0, 1], [1, 0]])
    values, support = confusion_from_predictions(probabilities, targets)
    assert support.tolist() == [[0, 2], [1, 0]]
    assert np.isnan(values[0, 0]) and np.isnan(values[1, 1])
    assert np.isclose(values[0, 1], 0.3)
    assert np.isclose(values[1, 0], 0.1)


def test_confusion_matrix():
    records, _ = DatasetBuilder(length=1, seed=2).generate(12)
    params = ModelParams.initialize(embedding_dim=2, hidden_units=8, hidden_layers=1)
    values, support = confusion_matrix(params, records, batch_size=5)
    assert values.shape == (NUM_ATTRIBUTES, NUM_ATTRIBUTES)
    assert list(values.index) == attribute_names()
    assert int(support.values.sum()) > 0
    defined = values.values[support.values > 0]
    assert ((defined > 0) & (defined < 1)).all()
    assert np.isnan(np.diag(values.values)).all()


def test_dump_embeddings():
    params = ModelParams.initialize(embedding_dim=5, hidden_units=8, hidden_layers=1)
    df = dump_embeddings(params)
    assert df.shape == (513, 5)
    assert df.index[0] == "-256"
    assert df.index[256] == "0"
    assert df.index[-1] == "null"
    assert np.array_equal(df.loc["3"].to_numpy(), params.embedding[259])
