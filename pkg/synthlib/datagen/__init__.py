########################################################
# ------------- synthlib.datagen: 0.1.0 ----------------

# Program enumeration, pruning, range propagation, example sampling
# and dataset files
# Library version: 0.1.0
#########################################################

from .ranges import EMPTY_RANGE, INDEX_RANGE, WORKING_RANGE, ValueRange, propagate_ranges, propagate_variable_ranges  # noqa
from .enumeration import (  # noqa
    DEFAULT_INPUT_SIGNATURES,
    InputSignature,
    candidate_calls,
    count_programs,
    enumerate_programs,
    programs_of_length,
)
from .fingerprint import Fingerprint, Fingerprinter, FingerprintTable, prune  # noqa
from .sampling import InfeasibleProgramError, SamplingExhaustedError, sample_examples  # noqa
from .dataset import (  # noqa
    DatasetBuilder,
    DatasetRecord,
    InsufficientProgramsError,
    InvalidRecordError,
    build_dataset,
    compute_prior,
    read_dataset,
    read_prior,
    validate_record,
    write_dataset,
    write_prior,
)
