# -*- coding: utf-8 -*-
"""Module with the function and lambda catalog of the list-manipulation DSL and its type system"""

from enum import Enum
from functools import lru_cache
from typing import AnyStr, List, NamedTuple, Optional, Tuple


class TypeTag(Enum):
    """Enum class for the two value types of the DSL, valued by their token spelling"""

    INT = "int"
    LIST = "[int]"


class AttributeKind(Enum):
    """Enum class to classify catalog entries"""

    FIRST_ORDER = "first-order"
    HIGHER_ORDER = "higher-order"
    LAMBDA = "lambda"


class LambdaClass(Enum):
    """Enum class for the three lambda signatures accepted by higher-order functions"""

    INT_TO_INT = "int->int"
    INT_TO_BOOL = "int->bool"
    INT_INT_TO_INT = "int->int->int"


class FunctionId(Enum):
    """Enum class for the 15 DSL functions, in catalog order, valued by their token spelling"""

    HEAD = "HEAD"
    LAST = "LAST"
    TAKE = "TAKE"
    DROP = "DROP"
    ACCESS = "ACCESS"
    MINIMUM = "MINIMUM"
    MAXIMUM = "MAXIMUM"
    REVERSE = "REVERSE"
    SORT = "SORT"
    SUM = "SUM"
    MAP = "MAP"
    FILTER = "FILTER"
    COUNT = "COUNT"
    ZIPWITH = "ZIPWITH"
    SCANL1 = "SCANL1"


class LambdaId(Enum):
    """Enum class for the 19 DSL lambdas, in catalog order, valued by their token spelling"""

    PLUS_ONE = "(+1)"
    MINUS_ONE = "(-1)"
    TIMES_TWO = "(*2)"
    DIV_TWO = "(/2)"
    NEGATE = "(*(-1))"
    SQUARE = "(**2)"
    TIMES_THREE = "(*3)"
    DIV_THREE = "(/3)"
    TIMES_FOUR = "(*4)"
    DIV_FOUR = "(/4)"
    POSITIVE = "(>0)"
    NEGATIVE = "(<0)"
    EVEN = "(%2==0)"
    ODD = "(%2==1)"
    ADD = "(+)"
    SUBTRACT = "(-)"
    MULTIPLY = "(*)"
    MIN = "MIN"
    MAX = "MAX"


class FunctionSignature(NamedTuple):
    arg_types: Tuple[TypeTag, ...]
    return_type: TypeTag
    lambda_class: Optional[LambdaClass] = None

    @property
    def is_higher_order(self) -> bool:
        return self.lambda_class is not None

    def __str__(self) -> AnyStr:
        parts = [f"({self.lambda_class.value})"] if self.is_higher_order else []
        parts += [t.value for t in self.arg_types] + [self.return_type.value]
        return "->".join(parts)


class CatalogEntry(NamedTuple):
    index: int
    name: AnyStr
    kind: AttributeKind
    signature: AnyStr


INT, LIST = TypeTag.INT, TypeTag.LIST

FUNCTION_SIGNATURES = {
    FunctionId.HEAD: FunctionSignature((LIST,), INT),
    FunctionId.LAST: FunctionSignature((LIST,), INT),
    FunctionId.TAKE: FunctionSignature((INT, LIST), LIST),
    FunctionId.DROP: FunctionSignature((INT, LIST), LIST),
    FunctionId.ACCESS: FunctionSignature((INT, LIST), INT),
    FunctionId.MINIMUM: FunctionSignature((LIST,), INT),
    FunctionId.MAXIMUM: FunctionSignature((LIST,), INT),
    FunctionId.REVERSE: FunctionSignature((LIST,), LIST),
    FunctionId.SORT: FunctionSignature((LIST,), LIST),
    FunctionId.SUM: FunctionSignature((LIST,), INT),
    FunctionId.MAP: FunctionSignature((LIST,), LIST, LambdaClass.INT_TO_INT),
    FunctionId.FILTER: FunctionSignature((LIST,), LIST, LambdaClass.INT_TO_BOOL),
    FunctionId.COUNT: FunctionSignature((LIST,), INT, LambdaClass.INT_TO_BOOL),
    FunctionId.ZIPWITH: FunctionSignature((LIST, LIST), LIST, LambdaClass.INT_INT_TO_INT),
    FunctionId.SCANL1: FunctionSignature((LIST,), LIST, LambdaClass.INT_INT_TO_INT),
}

LAMBDA_CLASSES = {
    **{lambda_id: LambdaClass.INT_TO_INT for lambda_id in list(LambdaId)[:10]},
    **{lambda_id: LambdaClass.INT_TO_BOOL for lambda_id in list(LambdaId)[10:14]},
    **{lambda_id: LambdaClass.INT_INT_TO_INT for lambda_id in list(LambdaId)[14:]},
}

FUNCTIONS = tuple(FunctionId)
LAMBDAS = tuple(LambdaId)
NUM_ATTRIBUTES = len(FUNCTIONS) + len(LAMBDAS)
"""int: C, the length of an attribute vector"""

# Upper bounds shared by the interpreter, data generation and the encoder
MAX_INPUTS = 3
MAX_STATEMENTS = 26
MAX_ARRAY_LENGTH = 20
MIN_INT = -256
MAX_INT = 255


def function_index(function: FunctionId) -> int:
    return FUNCTIONS.index(function)


def lambda_index(lambda_id: LambdaId) -> int:
    """Attribute index of a lambda: lambdas come after the 15 functions"""
    return len(FUNCTIONS) + LAMBDAS.index(lambda_id)


def lambdas_of_class(lambda_class: LambdaClass) -> List[LambdaId]:
    return [lambda_id for lambda_id in LAMBDAS if LAMBDA_CLASSES[lambda_id] == lambda_class]


@lru_cache(maxsize=1)
def catalog() -> Tuple[CatalogEntry, ...]:
    """Ordered catalog of the 34 attributes: 10 first-order functions, 5 higher-order functions, 19 lambdas

    The position of an entry is its index in every attribute vector, prediction and guidance vector.

    """
    entries = []
    for function in FUNCTIONS:
        signature = FUNCTION_SIGNATURES[function]
        kind = AttributeKind.HIGHER_ORDER if signature.is_higher_order else AttributeKind.FIRST_ORDER
        entries.append(CatalogEntry(len(entries), function.value, kind, str(signature)))
    for lambda_id in LAMBDAS:
        entries.append(CatalogEntry(len(entries), lambda_id.value, AttributeKind.LAMBDA, LAMBDA_CLASSES[lambda_id].value))
    return tuple(entries)


def attribute_names() -> List[AnyStr]:
    return [entry.name for entry in catalog()]


class Step(NamedTuple):
    """One kind of statement the search can append: a function, plus a lambda if higher-order"""

    function: FunctionId
    lambda_id: Optional[LambdaId] = None

    @property
    def attribute_indices(self) -> Tuple[int, ...]:
        if self.lambda_id is None:
            return (function_index(self.function),)
        return (function_index(self.function), lambda_index(self.lambda_id))

    def __str__(self) -> AnyStr:
        return self.function.value if self.lambda_id is None else f"{self.function.value} {self.lambda_id.value}"


@lru_cache(maxsize=1)
def steps() -> Tuple[Step, ...]:
    """All 38 steps in catalog order: first-order functions, then each higher-order function with its lambdas"""
    output = []
    for function in FUNCTIONS:
        signature = FUNCTION_SIGNATURES[function]
        if signature.is_higher_order:
            output += [Step(function, lambda_id) for lambda_id in lambdas_of_class(signature.lambda_class)]
        else:
            output.append(Step(function))
    return tuple(output)
