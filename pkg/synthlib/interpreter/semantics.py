# -*- coding: utf-8 -*-
"""Module with the semantics of every DSL function and lambda

Values are Python objects: None is Null, an int is a scalar, a tuple of ints is an array.
Any Null argument makes the result Null. Integer division rounds toward negative infinity.
Take and Drop clamp a negative count to 0.
"""

from functools import lru_cache, partial
from itertools import accumulate
from typing import Any, Callable, Dict, Optional, Sequence, Tuple, Union

from ..dsl.catalog import FUNCTION_SIGNATURES, LAMBDA_CLASSES, FunctionId, LambdaId, Step, TypeTag

Value = Union[None, int, Tuple[int, ...]]


class SignatureError(TypeError):
    """Custom exception raised when a function is applied to arguments that do not match its signature"""


LAMBDA_FUNCTIONS: Dict[LambdaId, Callable] = {
    LambdaId.PLUS_ONE: lambda x: x + 1,
    LambdaId.MINUS_ONE: lambda x: x - 1,
    LambdaId.TIMES_TWO: lambda x: x * 2,
    LambdaId.DIV_TWO: lambda x: x // 2,
    LambdaId.NEGATE: lambda x: -x,
    LambdaId.SQUARE: lambda x: x * x,
    LambdaId.TIMES_THREE: lambda x: x * 3,
    LambdaId.DIV_THREE: lambda x: x // 3,
    LambdaId.TIMES_FOUR: lambda x: x * 4,
    LambdaId.DIV_FOUR: lambda x: x // 4,
    LambdaId.POSITIVE: lambda x: x > 0,
    LambdaId.NEGATIVE: lambda x: x < 0,
    LambdaId.EVEN: lambda x: x % 2 == 0,
    LambdaId.ODD: lambda x: x % 2 == 1,
    LambdaId.ADD: lambda x, y: x + y,
    LambdaId.SUBTRACT: lambda x, y: x - y,
    LambdaId.MULTIPLY: lambda x, y: x * y,
    LambdaId.MIN: min,
    LambdaId.MAX: max,
}


def _head(xs):
    return xs[0] if xs else None


def _last(xs):
    return xs[-1] if xs else None


def _take(n, xs):
    return xs[: max(n, 0)]


def _drop(n, xs):
    return xs[max(n, 0):]


def _access(n, xs):
    return xs[n] if 0 <= n < len(xs) else None


def _minimum(xs):
    return min(xs) if xs else None


def _maximum(xs):
    return max(xs) if xs else None


def _reverse(xs):
    return xs[::-1]


def _sort(xs):
    return tuple(sorted(xs))


def _sum(xs):
    return sum(xs)


def _map(f, xs):
    return tuple(map(f, xs))


def _filter(f, xs):
    return tuple(x for x in xs if f(x))


def _count(f, xs):
    return sum(1 for x in xs if f(x))


def _zipwith(f, xs, ys):
    return tuple(map(f, xs, ys))


def _scanl1(f, xs):
    return tuple(accumulate(xs, f))


FUNCTION_IMPLEMENTATIONS: Dict[FunctionId, Callable] = {
    FunctionId.HEAD: _head,
    FunctionId.LAST: _last,
    FunctionId.TAKE: _take,
    FunctionId.DROP: _drop,
    FunctionId.ACCESS: _access,
    FunctionId.MINIMUM: _minimum,
    FunctionId.MAXIMUM: _maximum,
    FunctionId.REVERSE: _reverse,
    FunctionId.SORT: _sort,
    FunctionId.SUM: _sum,
    FunctionId.MAP: _map,
    FunctionId.FILTER: _filter,
    FunctionId.COUNT: _count,
    FunctionId.ZIPWITH: _zipwith,
    FunctionId.SCANL1: _scanl1,
}


def value_type(value: Value) -> Optional[TypeTag]:
    """Type of a runtime value, None for Null"""
    if value is None:
        return None
    if isinstance(value, tuple):
        return TypeTag.LIST
    if isinstance(value, int) and not isinstance(value, bool):
        return TypeTag.INT
    raise SignatureError(f"Not a DSL value: {value!r}")


def to_value(obj: Any) -> Value:
    """Convert a JSON-like object (None, int, list of ints) into a DSL value"""
    if obj is None:
        return None
    if isinstance(obj, (list, tuple)):
        return tuple(int(x) for x in obj)
    return int(obj)


def to_json(value: Value) -> Any:
    return list(value) if isinstance(value, tuple) else value


@lru_cache(maxsize=None)
def compile_step(step: Step) -> Callable[..., Value]:
    """Build the evaluation function of a step, taking positional argument values

    The returned function skips signature checks; callers guarantee well-typed arguments.

    """
    implementation = FUNCTION_IMPLEMENTATIONS[step.function]
    if step.lambda_id is not None:
        implementation = partial(implementation, LAMBDA_FUNCTIONS[step.lambda_id])

    def evaluate(*args):
        if None in args:
            return None
        return implementation(*args)

    evaluate.__name__ = str(step).lower().replace(" ", "_")
    return evaluate


def apply(function: FunctionId, lambda_id: Optional[LambdaId], args: Sequence[Value]) -> Value:
    """Apply a DSL function to argument values

    Args:
        function: Function to apply
        lambda_id: Lambda, present iff the function is higher-order
        args: Argument values; Null is allowed and absorbs

    Returns:
        Result value, Null if any argument is Null or the function is undefined on its arguments

    Raises:
        SignatureError: If arity, argument types or lambda class do not match the signature

    """
    signature = FUNCTION_SIGNATURES[function]
    if signature.is_higher_order != (lambda_id is not None):
        raise SignatureError(f"{function.value} {'needs' if signature.is_higher_order else 'takes no'} lambda")
    if lambda_id is not None and LAMBDA_CLASSES[lambda_id] != signature.lambda_class:
        raise SignatureError(f"{lambda_id.value} is not a {signature.lambda_class.value} lambda")
    if len(args) != len(signature.arg_types):
        raise SignatureError(f"{function.value} takes {len(signature.arg_types)} argument(s), got {len(args)}")
    for arg, expected in zip(args, signature.arg_types):
        actual = value_type(arg)
        if actual is not None and actual != expected:
            raise SignatureError(f"{function.value} expects {expected.value}, got {actual.value}")
    return compile_step(Step(function, lambda_id))(*args)
