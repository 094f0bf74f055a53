# -*- coding: utf-8 -*-
# Shared pytest fixtures
# pytest loads this file before collecting the test modules next to it
# see https://docs.pytest.org for more information

from functools import lru_cache
from itertools import product
from typing import Sequence, Tuple

import pytest

from synthlib.dsl import Call, Constant, FunctionId, LambdaId, ProgramTypeError, TypeTag
from synthlib.dsl.program import check_call

# no DSL function takes more than two arguments
MAX_BRUTE_FORCE_ARITY = 2


@lru_cache(maxsize=None)
def _well_typed_return_types(variable_types: Tuple[TypeTag, ...], constants: Tuple[int, ...]) -> Tuple[TypeTag, ...]:
    """Return types of every call the type checker accepts, trying all function, lambda and argument combinations"""
    pool = list(range(len(variable_types))) + [Constant(c) for c in constants]
    output = []
    for function, lambda_id in product(FunctionId, [None, *LambdaId]):
        for arity in range(1, MAX_BRUTE_FORCE_ARITY + 1):
            for args in product(pool, repeat=arity):
                try:
                    output.append(check_call(Call(function, lambda_id, args), variable_types, len(variable_types)))
                except ProgramTypeError:
                    continue
    return tuple(output)


def _brute_force_count(signature: Sequence[TypeTag], max_length: int, constants: Sequence[int]) -> int:
    constants = tuple(constants)

    def count_from(variable_types: Tuple[TypeTag, ...], remaining: int) -> int:
        if remaining == 0:
            return 1
        return sum(
            count_from(variable_types + (return_type,), remaining - 1)
            for return_type in _well_typed_return_types(variable_types, constants)
        )

    return sum(count_from(tuple(signature), length) for length in range(1, max_length + 1))


@pytest.fixture(scope="session")
def brute_force_count():
    """Counts well-typed programs of length 1 to T without going through the enumeration module"""
    return _brute_force_count
