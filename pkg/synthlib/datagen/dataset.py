# -*- coding: utf-8 -*-
"""Module to build, write and read datasets of programs with their attributes and examples"""

import hashlib
import heapq
import logging
import json
import itertools
from time import perf_counter
from typing import Any, AnyStr, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from fastcore.utils import store_attr
from tqdm.auto import tqdm as tqdm_auto

from ..dsl import AttributeVector, Program, attribute_names, attribute_vector, format_program, parse_program
from ..dsl.catalog import MAX_ARRAY_LENGTH, NUM_ATTRIBUTES
from ..interpreter import ExampleSet, consistent
from ..io_utils import FileFormatError, format_header, parse_header, read_csv, write_csv
from .enumeration import DEFAULT_INPUT_SIGNATURES, InputSignature, enumerate_programs
from .fingerprint import Fingerprinter, FingerprintTable, prune
from .ranges import propagate_ranges
from .sampling import DEFAULT_RETRY_BUDGET, SamplingExhaustedError, sample_examples


class InsufficientProgramsError(RuntimeError):
    """Custom exception raised when fewer distinct valid programs exist than requested"""


class InvalidRecordError(ValueError):
    """Custom exception raised when a dataset record breaks its own consistency rules"""


class DatasetRecord(NamedTuple):
    program: Program
    attributes: AttributeVector
    examples: ExampleSet

    @classmethod
    def from_program(cls, program: Program, examples: ExampleSet) -> "DatasetRecord":
        return cls(program, attribute_vector(program), examples)

    @classmethod
    def from_json(cls, obj: Dict[AnyStr, Any]) -> "DatasetRecord":
        return cls(parse_program(obj["program"]), AttributeVector(obj["attributes"]), ExampleSet.from_json(obj["examples"]))

    def to_json(self) -> Dict[AnyStr, Any]:
        return {
            "program": format_program(self.program),
            "attributes": self.attributes.to_list(),
            "examples": self.examples.to_json(),
        }


def validate_record(record: DatasetRecord, num_examples: Optional[int] = None) -> None:
    """Check a record against its program: attributes, example consistency and value bounds

    Raises:
        InvalidRecordError: On the first broken rule

    """
    if record.attributes != attribute_vector(record.program):
        raise InvalidRecordError(f"Attributes do not match program {record.program}")
    if num_examples is not None and len(record.examples) != num_examples:
        raise InvalidRecordError(f"Expected {num_examples} examples, got {len(record.examples)}")
    if not record.examples.within_bounds():
        raise InvalidRecordError(f"Examples of {record.program} leave the working range or exceed length {MAX_ARRAY_LENGTH}")
    if not consistent(record.program, record.examples):
        raise InvalidRecordError(f"Examples are not consistent with {record.program}")


def compute_prior(records: Sequence[DatasetRecord]) -> np.ndarray:
    """Incidence frequency of each attribute over the records, in catalog order"""
    if not records:
        raise ValueError("Cannot compute a prior from an empty dataset")
    bits = np.array([record.attributes.to_list() for record in records], dtype=np.float64)
    return bits.mean(axis=0)


def write_dataset(records: Iterable[DatasetRecord], path: AnyStr, **fields) -> int:
    """Write records as one JSON object per line after a header line; returns the number of records"""
    num_records = 0
    with open(path, "w", encoding="utf-8") as file:
        file.write(format_header("dataset", **fields) + "\n")
        for record in records:
            file.write(json.dumps(record.to_json(), separators=(",", ":")) + "\n")
            num_records += 1
    logging.info(f"Wrote {num_records} records to {path}")
    return num_records


def read_dataset(path: AnyStr, validate: bool = True) -> Tuple[Dict[AnyStr, Any], List[DatasetRecord]]:
    """Read a dataset file written by `write_dataset`

    Args:
        path: Path of the dataset file
        validate: If True, check every record with `validate_record`

    Returns:
        Tuple of (header fields, records)

    Raises:
        FileFormatError: If the header is missing or a line is not a valid record
        InvalidRecordError: If validation is on and a record is invalid

    """
    records = []
    with open(path, "r", encoding="utf-8") as file:
        fields = parse_header(file.readline(), "dataset")
        for line_number, line in enumerate(file, start=2):
            if not line.strip():
                continue
            try:
                record = DatasetRecord.from_json(json.loads(line))
            except (ValueError, KeyError, TypeError) as error:
                raise FileFormatError(f"Invalid record on line {line_number} of {path}: {error}")
            if validate:
                validate_record(record, fields.get("M"))
            records.append(record)
    logging.info(f"Read {len(records)} records from {path}")
    return fields, records


def write_prior(prior: np.ndarray, path: AnyStr, **fields) -> None:
    df = pd.DataFrame({"attribute": attribute_names(), "frequency": np.asarray(prior, dtype=np.float64)})
    write_csv(df, path, "prior", **fields)


def read_prior(path: AnyStr) -> np.ndarray:
    """Read a prior file as a vector of 34 frequencies in catalog order"""
    _, df = read_csv(path, "prior")
    if list(df.columns) != ["attribute", "frequency"] or list(df["attribute"]) != attribute_names():
        raise FileFormatError(f"Prior file {path} does not list the {NUM_ATTRIBUTES} attributes in catalog order")
    return df["frequency"].to_numpy(dtype=np.float64)


class DatasetBuilder:
    """Generates fingerprint-distinct programs of one length with sampled examples

    Programs of every length up to T are enumerated and pruned together, so that kept programs of length T
    differ from every shorter program, and the train and test splits are mutually distinct.

    Attributes:
        length: T, the number of calls of every program in the dataset
        seed: Seed for shuffling programs and sampling examples
        num_examples: M, examples per record
        input_signatures: Input type tuples to enumerate programs for
        retry_budget: Sampling attempts per example before the program is discarded

    """

    DEFAULT_NUM_EXAMPLES = ExampleSet.DEFAULT_NUM_EXAMPLES
    POOL_GROWTH = 4
    MIN_POOL_SIZE = 256

    def __init__(
        self,
        length: int,
        seed: int = 0,
        num_examples: int = DEFAULT_NUM_EXAMPLES,
        input_signatures: Sequence[InputSignature] = DEFAULT_INPUT_SIGNATURES,
        retry_budget: int = DEFAULT_RETRY_BUDGET,
    ):
        if length < 1:
            raise ValueError(f"Program length must be at least 1, got {length}")
        store_attr()
        self.input_signatures = tuple(tuple(s) for s in input_signatures)

    def candidate_programs(self) -> Iterator[AnyStr]:
        """Stream the canonical text of every kept program of exactly length T, in enumeration order"""
        start = perf_counter()
        logging.info(f"Enumerating and pruning programs up to length {self.length}...")
        table, fingerprinter = FingerprintTable(), Fingerprinter()
        programs = enumerate_programs(self.length, self.input_signatures)
        num_kept = 0
        for program in tqdm_auto(prune(programs, table, fingerprinter), unit="program", miniters=1, mininterval=1.0):
            if program.length == self.length:
                num_kept += 1
                yield format_program(program)
        logging.info(
            f"Enumerating and pruning programs up to length {self.length}: "
            + f"{num_kept} distinct programs of length {self.length} kept in {perf_counter() - start:.2f} seconds"
        )

    def shuffle_key(self, text: AnyStr) -> int:
        """Seeded pseudo-random rank of a program, independent of enumeration order"""
        digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8, key=str(self.seed).encode("utf-8")).digest()
        return int.from_bytes(digest, "big")

    def shuffled_candidates(self, limit: int) -> Tuple[List[Tuple[int, AnyStr]], bool]:
        """The `limit` kept programs with the smallest shuffle keys, as (key, text) pairs in key order

        Only `limit` programs are held in memory while the stream is consumed.

        Returns:
            Tuple of (selected candidates, whether every kept program was selected)

        """
        counter = itertools.count()
        keyed = ((self.shuffle_key(text), text) for text, _ in zip(self.candidate_programs(), counter))
        selected = heapq.nsmallest(limit, keyed)
        return selected, next(counter) <= limit

    def _sample_records(self, candidates: Iterable[Tuple[int, AnyStr]], wanted: int) -> List[DatasetRecord]:
        records: List[DatasetRecord] = []
        num_infeasible, num_exhausted = 0, 0
        with tqdm_auto(total=wanted, unit="record", miniters=1, mininterval=1.0) as progress:
            for key, text in candidates:
                if len(records) == wanted:
                    break
                program = parse_program(text)
                ranges = propagate_ranges(program)
                if ranges is None:
                    num_infeasible += 1
                    continue
                rng = np.random.default_rng([self.seed, key])
                try:
                    examples = sample_examples(program, ranges, self.num_examples, rng, self.retry_budget)
                except SamplingExhaustedError as error:
                    logging.debug(str(error))
                    num_exhausted += 1
                    continue
                record = DatasetRecord.from_program(program, examples)
                validate_record(record, self.num_examples)
                records.append(record)
                progress.update(1)
        if num_infeasible or num_exhausted:
            logging.warning(
                f"Discarded {num_infeasible} infeasible program(s) and "
                + f"{num_exhausted} program(s) with exhausted sampling budget"
            )
        return records

    def generate(self, count: int, test_count: int = 0) -> Tuple[List[DatasetRecord], List[DatasetRecord]]:
        """Sample examples for candidates in shuffle-key order until `count + test_count` records are made

        Candidates are streamed: a pool of the programs with the smallest keys is kept, and widened only when too
        many of them turn out infeasible. Records depend on the seed alone, not on the pool size.

        Returns:
            Tuple of (training records, test records)

        Raises:
            InsufficientProgramsError: If candidates run out before enough records are made

        """
        wanted = count + test_count
        limit = max(wanted * self.POOL_GROWTH, self.MIN_POOL_SIZE)
        while True:
            candidates, complete = self.shuffled_candidates(limit)
            records = self._sample_records(candidates, wanted)
            if len(records) == wanted or complete:
                break
            logging.info(f"Only {len(records)} records out of {limit} candidates, widening the pool")
            limit *= self.POOL_GROWTH
        if len(records) < wanted:
            raise InsufficientProgramsError(
                f"Only {len(records)} valid distinct programs of length {self.length}, {wanted} requested"
            )
        return records[:count], records[count:]


def build_dataset(
    length: int,
    count: int,
    seed: int,
    output_path: AnyStr,
    prior_path: AnyStr,
    test_count: int = 0,
    test_path: Optional[AnyStr] = None,
    num_examples: int = DatasetBuilder.DEFAULT_NUM_EXAMPLES,
    input_signatures: Sequence[InputSignature] = DEFAULT_INPUT_SIGNATURES,
) -> np.ndarray:
    """Generate a dataset of `count` records (plus an optional held-out split) and write it with its prior

    Args:
        length: T, the number of calls of every program
        count: N, the number of training records
        seed: Seed making the whole build reproducible
        output_path: Path of the training dataset file
        prior_path: Path of the prior file, computed on the training records
        test_count: Number of held-out records, fingerprint-distinct from training programs
        test_path: Path of the held-out dataset file, required if test_count > 0
        num_examples: M, examples per record
        input_signatures: Input type tuples to enumerate programs for

    Returns:
        The prior vector of 34 attribute frequencies

    Raises:
        ValueError: If test_count > 0 without test_path
        InsufficientProgramsError: If fewer valid distinct programs exist than requested

    """
    if test_count > 0 and test_path is None:
        raise ValueError("A test path is required to write a held-out split")
    builder = DatasetBuilder(length, seed, num_examples, input_signatures)
    train_records, test_records = builder.generate(count, test_count)
    fields = {"T": length, "M": num_examples, "L": MAX_ARRAY_LENGTH, "seed": seed}
    write_dataset(train_records, output_path, N=len(train_records), split="train", **fields)
    if test_count > 0:
        write_dataset(test_records, test_path, N=len(test_records), split="test", **fields)
    prior = compute_prior(train_records)
    write_prior(prior, prior_path, N=len(train_records), **fields)
    return prior
