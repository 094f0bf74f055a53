# -*- coding: utf-8 -*-
"""Module to propagate value-range constraints backward through a program

Ranges bound every integer of a variable (each element, for arrays). Starting from the range imposed on the
output, each statement turns the range of its result into ranges for its arguments, so that inputs drawn from
the returned ranges keep every intermediate value and the output inside the working range.
"""

from math import isqrt
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from ..dsl.catalog import MAX_ARRAY_LENGTH, MAX_INT, MIN_INT, FunctionId, LambdaId, TypeTag
from ..dsl.program import Constant, Program


class ValueRange(NamedTuple):
    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def intersect(self, other: "ValueRange") -> "ValueRange":
        return ValueRange(max(self.lo, other.lo), min(self.hi, other.hi))

    def contains(self, other: "ValueRange") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


WORKING_RANGE = ValueRange(MIN_INT, MAX_INT)
INDEX_RANGE = ValueRange(0, MAX_ARRAY_LENGTH)
EMPTY_RANGE = ValueRange(1, 0)


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _scaled(factor: int) -> Callable[[ValueRange], ValueRange]:
    return lambda r: ValueRange(_ceil_div(r.lo, factor), _floor_div(r.hi, factor))


def _divided(divisor: int) -> Callable[[ValueRange], ValueRange]:
    # x // d lies in [lo, hi] iff x lies in [d * lo, d * hi + d - 1]
    return lambda r: ValueRange(divisor * r.lo, divisor * r.hi + divisor - 1)


def _squared(r: ValueRange) -> ValueRange:
    if r.hi < 0:
        return EMPTY_RANGE
    root = isqrt(r.hi)
    if r.lo <= 0:
        return ValueRange(-root, root)
    # only the positive branch keeps an interval
    return ValueRange(isqrt(r.lo - 1) + 1, root)


MAP_INVERSES: Dict[LambdaId, Callable[[ValueRange], ValueRange]] = {
    LambdaId.PLUS_ONE: lambda r: ValueRange(r.lo - 1, r.hi - 1),
    LambdaId.MINUS_ONE: lambda r: ValueRange(r.lo + 1, r.hi + 1),
    LambdaId.TIMES_TWO: _scaled(2),
    LambdaId.DIV_TWO: _divided(2),
    LambdaId.NEGATE: lambda r: ValueRange(-r.hi, -r.lo),
    LambdaId.SQUARE: _squared,
    LambdaId.TIMES_THREE: _scaled(3),
    LambdaId.DIV_THREE: _divided(3),
    LambdaId.TIMES_FOUR: _scaled(4),
    LambdaId.DIV_FOUR: _divided(4),
}


def _summable(r: ValueRange, max_terms: int = MAX_ARRAY_LENGTH) -> ValueRange:
    """Element range such that every sum of 1 to max_terms elements stays in r"""
    lo = r.lo if r.lo >= 0 else _ceil_div(r.lo, max_terms)
    hi = _floor_div(r.hi, max_terms) if r.hi >= 0 else r.hi
    return ValueRange(lo, hi)


def _symmetric_budget(r: ValueRange) -> int:
    """Largest m with [-m, m] inside r, negative if r does not contain 0"""
    return min(-r.lo, r.hi)


def _zipwith_inverse(lambda_id: LambdaId, r: ValueRange) -> ValueRange:
    if lambda_id in (LambdaId.MIN, LambdaId.MAX):
        return r
    if lambda_id == LambdaId.ADD:
        return ValueRange(_ceil_div(r.lo, 2), _floor_div(r.hi, 2))
    budget = _symmetric_budget(r)
    if budget < 0:
        return EMPTY_RANGE
    if lambda_id == LambdaId.SUBTRACT:
        lo = -(budget // 2)
        return ValueRange(lo, lo + budget)
    root = isqrt(budget)
    return ValueRange(-root, root)


def _scanl1_inverse(lambda_id: LambdaId, r: ValueRange) -> ValueRange:
    if lambda_id in (LambdaId.MIN, LambdaId.MAX):
        return r
    if lambda_id == LambdaId.ADD:
        return _summable(r)
    budget = _symmetric_budget(r)
    if budget < 0:
        return EMPTY_RANGE
    if lambda_id == LambdaId.SUBTRACT:
        return ValueRange(-(budget // MAX_ARRAY_LENGTH), budget // MAX_ARRAY_LENGTH)
    # running products of up to L factors: only |x| <= 1 is safe
    return ValueRange(-1, 1) if budget >= 1 else ValueRange(0, 0)


def _argument_ranges(program: Program, index: int, result: ValueRange) -> List[Optional[ValueRange]]:
    """Ranges required of each argument of statement `index`, None for literal arguments"""
    call = program.statements[index].kind
    function, lambda_id = call.function, call.lambda_id
    if function in (FunctionId.TAKE, FunctionId.DROP, FunctionId.ACCESS):
        ranges = [INDEX_RANGE, result]
    elif function == FunctionId.SUM:
        ranges = [_summable(result)]
    elif function == FunctionId.MAP:
        ranges = [MAP_INVERSES[lambda_id](result)]
    elif function == FunctionId.COUNT:
        # counts range over [0, L] whatever the elements are
        ranges = [WORKING_RANGE if result.contains(INDEX_RANGE) else EMPTY_RANGE]
    elif function == FunctionId.ZIPWITH:
        ranges = [_zipwith_inverse(lambda_id, result)] * 2
    elif function == FunctionId.SCANL1:
        ranges = [_scanl1_inverse(lambda_id, result)]
    else:
        # HEAD, LAST, MINIMUM, MAXIMUM, REVERSE, SORT, FILTER return elements of their array argument
        ranges = [result]
    return [None if isinstance(arg, Constant) else r for arg, r in zip(call.args, ranges)]


def propagate_variable_ranges(
    program: Program, output_range: ValueRange = WORKING_RANGE, working_range: ValueRange = WORKING_RANGE
) -> Optional[Tuple[ValueRange, ...]]:
    """Ranges for every variable of the program, or None if some range is empty"""
    ranges = [working_range] * len(program.statements)
    ranges[-1] = ranges[-1].intersect(output_range)
    for index in range(len(program.statements) - 1, program.num_inputs - 1, -1):
        if ranges[index].is_empty:
            return None
        call = program.statements[index].kind
        for arg, arg_range in zip(call.args, _argument_ranges(program, index, ranges[index])):
            if arg_range is not None:
                ranges[arg] = ranges[arg].intersect(arg_range)
    if any(r.is_empty for r in ranges):
        return None
    return tuple(ranges)


def propagate_ranges(program: Program, output_range: ValueRange = WORKING_RANGE) -> Optional[Tuple[ValueRange, ...]]:
    """Per-input value ranges keeping every intermediate and the output inside the working range

    Args:
        program: Well-typed program
        output_range: Range imposed on the output integers

    Returns:
        One range per input (per element for array inputs), or None if the program is infeasible

    """
    ranges = propagate_variable_ranges(program, output_range)
    if ranges is None:
        return None
    input_ranges = ranges[: program.num_inputs]
    for type_tag, r in zip(program.input_types, input_ranges):
        if type_tag == TypeTag.INT and r.intersect(INDEX_RANGE).is_empty:
            return None
    return input_ranges
