# -*- coding: utf-8 -*-
"""Module with the prefix-evaluation cache used to extend programs one statement at a time"""

from itertools import count
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..dsl.program import Constant, Statement
from .interpreter import Environment
from .semantics import Value, compile_step


class PrefixCacheMiss(KeyError):
    """Custom exception raised when a prefix key is not (or no longer) held by the cache"""


class CacheEntry(NamedTuple):
    parent: Optional[int]
    statement: Optional[Statement]
    environments: Tuple[Environment, ...]


class PrefixCache:
    """Per-example environments of program prefixes, addressed by opaque integer keys

    A key is obtained from `seed` for the input declarations, then from `extend` for every appended statement.
    One cache serves one example set and one search worker; it is never shared.

    """

    def __init__(self):
        self._entries: Dict[int, CacheEntry] = {}
        self._keys = count()

    def seed(self, inputs_per_example: Sequence[Sequence[Value]]) -> int:
        """Register the input values of every example; returns the key of the empty program prefix"""
        key = next(self._keys)
        environments = tuple(tuple(inputs) for inputs in inputs_per_example)
        self._entries[key] = CacheEntry(None, None, environments)
        return key

    def lookup(self, key: int) -> Tuple[Environment, ...]:
        try:
            return self._entries[key].environments
        except KeyError:
            raise PrefixCacheMiss(key)

    def extend(self, key: int, statement: Statement, values: Sequence[Value]) -> int:
        """Store the environments of prefix `key` followed by `statement`, given its value per example"""
        environments = tuple(env + (value,) for env, value in zip(self.lookup(key), values))
        new_key = next(self._keys)
        self._entries[new_key] = CacheEntry(key, statement, environments)
        return new_key

    def release(self, key: int) -> None:
        self._entries.pop(key, None)

    def statements(self, key: int) -> List[Statement]:
        """Call statements appended since the seed, in program order"""
        output = []
        entry = self._entries.get(key)
        if entry is None:
            raise PrefixCacheMiss(key)
        while entry.statement is not None:
            output.append(entry.statement)
            entry = self._entries[entry.parent]
        return output[::-1]

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: int) -> bool:
        return key in self._entries


def run_with_cache(key: int, statement: Statement, cache: PrefixCache) -> Tuple[Value, ...]:
    """Evaluate only `statement` on top of a cached prefix, once per example

    Returns:
        The value of the new variable for each example, identical to a full uncached run

    Raises:
        PrefixCacheMiss: If the prefix is not cached

    """
    call = statement.kind
    step_function = compile_step(call.step)
    results = []
    for environment in cache.lookup(key):
        args = [arg.value if isinstance(arg, Constant) else environment[arg] for arg in call.args]
        results.append(step_function(*args))
    return tuple(results)
