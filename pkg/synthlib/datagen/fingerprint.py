# -*- coding: utf-8 -*-
"""Module to detect redundant and semantically equivalent programs

Two programs are treated as equivalent when they produce the same outputs on a fixed battery of seeded test
inputs. The battery over-approximates equivalence: programs with different fingerprints are certainly distinct.
"""

import logging
import hashlib
from functools import lru_cache
from threading import Lock
from typing import Dict, Iterable, Iterator, NamedTuple, Optional, Set, Tuple

import numpy as np
from fastcore.utils import store_attr

from ..dsl.catalog import MAX_ARRAY_LENGTH, MAX_INT, MIN_INT, TypeTag
from ..dsl.program import Constant, Program, Statement
from ..interpreter import Environment, Value, compile_step
from .enumeration import InputSignature


class Fingerprint(NamedTuple):
    signature: InputSignature
    outputs: Tuple[Value, ...]

    def digest(self) -> bytes:
        """Compact 16-byte key for the fingerprint, used by FingerprintTable"""
        signature = ",".join(t.value for t in self.signature)
        return hashlib.blake2b(f"{signature}|{self.outputs!r}".encode("utf-8"), digest_size=16).digest()


class FingerprintTable:
    """Set of fingerprint digests with an atomic insert-if-absent, safe to share across threads"""

    def __init__(self):
        self._digests: Set[bytes] = set()
        self._lock = Lock()

    def insert_if_absent(self, fingerprint: Fingerprint) -> bool:
        """Insert a fingerprint; returns True if it was not present before"""
        digest = fingerprint.digest()
        with self._lock:
            if digest in self._digests:
                return False
            self._digests.add(digest)
            return True

    def __contains__(self, fingerprint: Fingerprint) -> bool:
        return fingerprint.digest() in self._digests

    def __len__(self) -> int:
        return len(self._digests)


class Fingerprinter:
    """Computes program fingerprints on a seeded input battery, one battery per input signature

    Half of the battery inputs draw array elements from the working range, the other half from a narrow range around 0
    so that comparisons and parity tests see both signs often. Int inputs are drawn in [0, L].
    Environments of recent program prefixes are cached, which makes depth-first streams of programs cheap.

    """

    DEFAULT_BATTERY_SIZE = 32
    DEFAULT_BATTERY_SEED = 1337
    DEFAULT_CACHE_SIZE = 4096
    NARROW_RANGE = (-10, 10)

    def __init__(
        self,
        battery_size: int = DEFAULT_BATTERY_SIZE,
        battery_seed: int = DEFAULT_BATTERY_SEED,
        cache_size: int = DEFAULT_CACHE_SIZE,
    ):
        store_attr()
        self._batteries: Dict[InputSignature, Tuple[Tuple[Value, ...], ...]] = {}
        self._environments = lru_cache(maxsize=cache_size)(self._compute_environments)

    def battery(self, signature: InputSignature) -> Tuple[Tuple[Value, ...], ...]:
        """Test inputs for a signature, identical across calls and instances with the same battery seed"""
        if signature not in self._batteries:
            type_codes = [0 if t == TypeTag.INT else 1 for t in signature]
            rng = np.random.default_rng([self.battery_seed, len(signature)] + type_codes)
            inputs = []
            for index in range(self.battery_size):
                lo, hi = (MIN_INT, MAX_INT) if index < self.battery_size // 2 else self.NARROW_RANGE
                row = []
                for type_tag in signature:
                    if type_tag == TypeTag.INT:
                        row.append(int(rng.integers(0, MAX_ARRAY_LENGTH + 1)))
                    else:
                        length = int(rng.integers(1, MAX_ARRAY_LENGTH + 1))
                        row.append(tuple(rng.integers(lo, hi + 1, size=length).tolist()))
                inputs.append(tuple(row))
            self._batteries[signature] = tuple(inputs)
        return self._batteries[signature]

    def _compute_environments(self, statements: Tuple[Statement, ...]) -> Tuple[Environment, ...]:
        last = statements[-1]
        if last.is_input:
            signature = tuple(s.kind.type_tag for s in statements)
            return self.battery(signature)
        parent = self._environments(statements[:-1])
        call = last.kind
        step_function = compile_step(call.step)
        output = []
        for environment in parent:
            args = [arg.value if isinstance(arg, Constant) else environment[arg] for arg in call.args]
            output.append(environment + (step_function(*args),))
        return tuple(output)

    def fingerprint(self, program: Program) -> Fingerprint:
        environments = self._environments(program.statements)
        return Fingerprint(program.input_types, tuple(environment[-1] for environment in environments))

    def input_fingerprints(self, signature: InputSignature) -> Tuple[Fingerprint, ...]:
        """Fingerprints of returning one of the inputs unchanged, which no kept program may reproduce"""
        battery = self.battery(signature)
        return tuple(Fingerprint(signature, tuple(row[i] for row in battery)) for i in range(len(signature)))


def prune(
    programs: Iterable[Program],
    table: Optional[FingerprintTable] = None,
    fingerprinter: Optional[Fingerprinter] = None,
) -> Iterator[Program]:
    """Drop programs with a dead variable or with the fingerprint of a previously kept program

    The table is seeded with the fingerprints of the inputs themselves, so programs behaving like the identity
    on one of their inputs (e.g. reversing twice) count as duplicates of the empty program.

    Args:
        programs: Program stream, shortest programs first so that kept programs are shortest representatives
        table: Fingerprints of kept programs, shared when several streams must stay mutually distinct
        fingerprinter: Input battery to use, a default one if None

    Yields:
        Kept programs, in stream order

    """
    table = FingerprintTable() if table is None else table
    fingerprinter = Fingerprinter() if fingerprinter is None else fingerprinter
    num_seen, num_dead, num_duplicate = 0, 0, 0
    seeded_signatures = set()
    for program in programs:
        num_seen += 1
        signature = program.input_types
        if signature not in seeded_signatures:
            for input_fingerprint in fingerprinter.input_fingerprints(signature):
                table.insert_if_absent(input_fingerprint)
            seeded_signatures.add(signature)
        if program.has_dead_variable():
            num_dead += 1
            continue
        if not table.insert_if_absent(fingerprinter.fingerprint(program)):
            num_duplicate += 1
            continue
        yield program
    logging.info(
        f"Pruned {num_dead + num_duplicate} out of {num_seen} programs: "
        f"{num_dead} with a dead variable, {num_duplicate} equivalent to a kept program"
    )
