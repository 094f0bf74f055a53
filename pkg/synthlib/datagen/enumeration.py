# -*- coding: utf-8 -*-
"""Module to enumerate well-typed programs of the DSL"""

from functools import lru_cache
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from ..dsl.catalog import FUNCTION_SIGNATURES, Step, TypeTag, steps
from ..dsl.program import Call, Constant, InputDecl, Program, Statement

InputSignature = Tuple[TypeTag, ...]

DEFAULT_INPUT_SIGNATURES: Tuple[InputSignature, ...] = (
    (TypeTag.LIST,),
    (TypeTag.LIST, TypeTag.LIST),
    (TypeTag.INT, TypeTag.LIST),
)


@lru_cache(maxsize=16384)
def candidate_calls(
    variable_types: Tuple[TypeTag, ...], allowed_steps: Tuple[Step, ...], constants: Tuple[int, ...] = ()
) -> Tuple[Call, ...]:
    """All type-correct calls over the given variables, in step order then argument order

    Int arguments range over int variables by ascending index, then over the literal constants.
    Array arguments range over array variables by ascending index.

    """
    pools = {
        TypeTag.INT: [i for i, t in enumerate(variable_types) if t == TypeTag.INT] + [Constant(c) for c in constants],
        TypeTag.LIST: [i for i, t in enumerate(variable_types) if t == TypeTag.LIST],
    }
    output = []
    for step in allowed_steps:
        arg_types = FUNCTION_SIGNATURES[step.function].arg_types
        for args in product(*(pools[t] for t in arg_types)):
            output.append(Call(step.function, step.lambda_id, tuple(args)))
    return tuple(output)


def _input_statements(signature: InputSignature) -> List[Statement]:
    return [Statement(i, InputDecl(t)) for i, t in enumerate(signature)]


def _extend(
    statements: List[Statement],
    variable_types: List[TypeTag],
    remaining: int,
    allowed_steps: Tuple[Step, ...],
    constants: Tuple[int, ...],
) -> Iterator[Program]:
    if remaining == 0:
        yield Program(statements)
        return
    for call in candidate_calls(tuple(variable_types), allowed_steps, constants):
        statements.append(Statement(len(statements), call))
        variable_types.append(FUNCTION_SIGNATURES[call.function].return_type)
        yield from _extend(statements, variable_types, remaining - 1, allowed_steps, constants)
        statements.pop()
        variable_types.pop()


def programs_of_length(
    signature: InputSignature,
    length: int,
    allowed_steps: Sequence[Step] = None,
    constants: Sequence[int] = (),
) -> Iterator[Program]:
    """Depth-first enumeration of the well-typed programs with exactly `length` calls"""
    allowed_steps = steps() if allowed_steps is None else tuple(allowed_steps)
    statements = _input_statements(signature)
    yield from _extend(statements, list(signature), length, allowed_steps, tuple(constants))


def enumerate_programs(
    max_length: int,
    input_signatures: Sequence[InputSignature] = DEFAULT_INPUT_SIGNATURES,
    allowed_steps: Sequence[Step] = None,
    constants: Sequence[int] = (),
) -> Iterator[Program]:
    """Stream every well-typed program of length 1 to max_length, each exactly once

    Programs come level by level: all programs of length 1 over every signature, then length 2, and so on.
    Within a level the order is depth-first over `candidate_calls`, hence deterministic.

    Args:
        max_length: T, the maximum number of calls
        input_signatures: Input type tuples to enumerate programs for
        allowed_steps: Steps calls may use, all 38 by default
        constants: Integer literals allowed as int arguments, none by default

    Raises:
        ValueError: If max_length is below 1

    """
    if max_length < 1:
        raise ValueError(f"Program length must be at least 1, got {max_length}")
    for length in range(1, max_length + 1):
        for signature in input_signatures:
            yield from programs_of_length(signature, length, allowed_steps, constants)


def count_programs(
    signature: InputSignature,
    max_length: int,
    allowed_steps: Sequence[Step] = None,
    constants: Sequence[int] = (),
) -> int:
    """Number of programs `enumerate_programs` emits for one signature, computed without building them"""
    allowed_steps = steps() if allowed_steps is None else tuple(allowed_steps)
    constants = tuple(constants)

    @lru_cache(maxsize=None)
    def count_from(variable_types: Tuple[TypeTag, ...], remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for call in candidate_calls(variable_types, allowed_steps, constants):
            return_type = FUNCTION_SIGNATURES[call.function].return_type
            total += count_from(variable_types + (return_type,), remaining - 1)
        return total

    return sum(count_from(tuple(signature), length) for length in range(1, max_length + 1))
