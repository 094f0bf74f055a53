# -*- coding: utf-8 -*-
"""Module to save and load network weights

File layout, little-endian throughout:
    4 bytes     magic b"SYNW"
    7 x int32   format version, E, K, H, C, L, slot count
    float64     embedding (513 x E), then for each hidden layer its weights (in x K) and bias (K),
                then the decoder (C x K) and its bias (C), each array in row-major order
"""

import logging
from typing import AnyStr, Dict, Optional

import numpy as np

from .featurizer import EMBEDDING_ROWS, NUM_SLOTS, input_width
from .params import ModelParams

WEIGHTS_MAGIC = b"SYNW"
WEIGHTS_FORMAT_VERSION = 1
HEADER_FIELDS = ("version", "embedding_dim", "hidden_units", "hidden_layers", "num_attributes", "max_length", "num_slots")
HEADER_DTYPE = np.dtype("<i4")
ARRAY_DTYPE = np.dtype("<f8")


class WeightsFileError(ValueError):
    """Custom exception raised when a weights file cannot be loaded"""


class CorruptWeightsError(WeightsFileError):
    """Custom exception raised when a weights file is truncated, has trailing bytes or holds non-finite values"""


class DimensionMismatchError(WeightsFileError):
    """Custom exception raised when a weights file has another version or other dimensions than expected"""


def save_params(params: ModelParams, path: AnyStr) -> None:
    header = np.array(
        [
            WEIGHTS_FORMAT_VERSION,
            params.embedding_dim,
            params.hidden_units,
            params.hidden_layers,
            params.num_attributes,
            params.max_length,
            params.num_slots,
        ],
        dtype=HEADER_DTYPE,
    )
    with open(path, "wb") as file:
        file.write(WEIGHTS_MAGIC)
        file.write(header.tobytes())
        for array in params.arrays():
            file.write(np.ascontiguousarray(array, dtype=ARRAY_DTYPE).tobytes())
    logging.info(f"Saved {params} to {path}")


def _array_shapes(header: Dict[AnyStr, int]):
    E, K, C, L = header["embedding_dim"], header["hidden_units"], header["num_attributes"], header["max_length"]
    shapes = [(EMBEDDING_ROWS, E)]
    fan_in = input_width(E, L)
    for _ in range(header["hidden_layers"]):
        shapes += [(fan_in, K), (K,)]
        fan_in = K
    return shapes + [(C, K), (C,)]


def load_params(path: AnyStr, expected: Optional[Dict[AnyStr, int]] = None) -> ModelParams:
    """Load weights written by `save_params`

    Args:
        path: Weights file
        expected: Optional header values the file must match, e.g. {"hidden_units": 256}

    Raises:
        CorruptWeightsError: If the file is not a weights file, is truncated, too long or holds NaN/Inf
        DimensionMismatchError: If the version or a dimension differs from what is expected

    """
    with open(path, "rb") as file:
        content = file.read()
    header_size = len(WEIGHTS_MAGIC) + len(HEADER_FIELDS) * HEADER_DTYPE.itemsize
    if content[: len(WEIGHTS_MAGIC)] != WEIGHTS_MAGIC or len(content) < header_size:
        raise CorruptWeightsError(f"{path} is not a synthlib weights file")
    values = np.frombuffer(content, dtype=HEADER_DTYPE, count=len(HEADER_FIELDS), offset=len(WEIGHTS_MAGIC))
    header = dict(zip(HEADER_FIELDS, (int(v) for v in values)))
    if header["version"] != WEIGHTS_FORMAT_VERSION:
        raise DimensionMismatchError(f"Unsupported weights format version {header['version']}")
    if header["num_slots"] != NUM_SLOTS:
        raise DimensionMismatchError(f"Weights use {header['num_slots']} example slots, expected {NUM_SLOTS}")
    for name, value in (expected or {}).items():
        if header.get(name) != value:
            raise DimensionMismatchError(f"Weights have {name}={header.get(name)}, expected {value}")
    if min(header[name] for name in HEADER_FIELDS[1:]) < 1:
        raise CorruptWeightsError(f"Invalid dimensions in {path}: {header}")
    shapes = _array_shapes(header)
    expected_size = header_size + sum(int(np.prod(shape)) for shape in shapes) * ARRAY_DTYPE.itemsize
    if len(content) != expected_size:
        raise CorruptWeightsError(f"{path} holds {len(content)} bytes, {expected_size} expected from its header")
    arrays, offset = [], header_size
    for shape in shapes:
        count = int(np.prod(shape))
        arrays.append(np.frombuffer(content, dtype=ARRAY_DTYPE, count=count, offset=offset).reshape(shape).astype(np.float64))
        offset += count * ARRAY_DTYPE.itemsize
    params = ModelParams.from_arrays(arrays, header["max_length"])
    if not params.is_finite():
        raise CorruptWeightsError(f"{path} holds NaN or infinite weights")
    logging.info(f"Loaded {params} from {path}")
    return params
