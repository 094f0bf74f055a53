# -*- coding: utf-8 -*-
"""Module with the abstract syntax of straight-line DSL programs"""

from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from .catalog import (
    FUNCTION_SIGNATURES,
    LAMBDA_CLASSES,
    MAX_INPUTS,
    MAX_STATEMENTS,
    FunctionId,
    LambdaId,
    Step,
    TypeTag,
)
from .errors import ProgramTypeError


class Constant(NamedTuple):
    """Non-negative integer literal used as an `int` argument"""

    value: int


Argument = Union[int, Constant]
"""A call argument: index of an earlier variable, or an integer literal"""


class InputDecl(NamedTuple):
    type_tag: TypeTag


class Call(NamedTuple):
    function: FunctionId
    lambda_id: Optional[LambdaId]
    args: Tuple[Argument, ...]

    @property
    def step(self) -> Step:
        return Step(self.function, self.lambda_id)


class Statement(NamedTuple):
    target: int
    kind: Union[InputDecl, Call]

    @property
    def is_input(self) -> bool:
        return isinstance(self.kind, InputDecl)


def check_call(call: Call, variable_types: Sequence[TypeTag], statement_index: int) -> TypeTag:
    """Type-check one call against the types of the variables defined before it

    Returns:
        The type of the variable the call initializes

    Raises:
        ProgramTypeError: On arity, argument type, lambda class or forward-reference violations

    """
    signature = FUNCTION_SIGNATURES[call.function]
    if signature.is_higher_order:
        if call.lambda_id is None:
            raise ProgramTypeError(f"{call.function.value} needs a lambda", statement_index)
        actual_class = LAMBDA_CLASSES[call.lambda_id]
        if actual_class != signature.lambda_class:
            raise ProgramTypeError(
                f"Wrong lambda for {call.function.value}",
                statement_index,
                expected=signature.lambda_class.value,
                actual=actual_class.value,
            )
    elif call.lambda_id is not None:
        raise ProgramTypeError(f"{call.function.value} takes no lambda", statement_index)
    if len(call.args) != len(signature.arg_types):
        raise ProgramTypeError(
            f"Wrong number of arguments for {call.function.value}",
            statement_index,
            expected=len(signature.arg_types),
            actual=len(call.args),
        )
    for arg, expected in zip(call.args, signature.arg_types):
        if isinstance(arg, Constant):
            if expected != TypeTag.INT or arg.value < 0:
                raise ProgramTypeError(
                    f"Literal {arg.value} not allowed here", statement_index, expected=expected.value, actual="literal"
                )
            continue
        if not 0 <= arg < len(variable_types):
            raise ProgramTypeError(f"Argument refers to undefined variable {arg}", statement_index)
        if variable_types[arg] != expected:
            raise ProgramTypeError(
                f"Wrong argument type for {call.function.value}",
                statement_index,
                expected=expected.value,
                actual=variable_types[arg].value,
            )
    return signature.return_type


class Program:
    """Typed straight-line program: input declarations followed by function calls

    Statement i initializes variable i; the last variable is the output.
    Programs are immutable, hashable and compare structurally.

    """

    __slots__ = ("statements", "variable_types", "_hash")

    def __init__(self, statements: Sequence[Statement]):
        statements = tuple(statements)
        object.__setattr__(self, "statements", statements)
        object.__setattr__(self, "variable_types", self._check(statements))
        object.__setattr__(self, "_hash", hash(statements))

    @classmethod
    def from_parts(cls, input_types: Sequence[TypeTag], calls: Sequence[Call]) -> "Program":
        statements = [Statement(i, InputDecl(t)) for i, t in enumerate(input_types)]
        statements += [Statement(len(statements) + i, call) for i, call in enumerate(calls)]
        return cls(statements)

    @staticmethod
    def _check(statements: Tuple[Statement, ...]) -> Tuple[TypeTag, ...]:
        if len(statements) > MAX_STATEMENTS:
            raise ProgramTypeError(f"Programs are capped at {MAX_STATEMENTS} statements", len(statements) - 1)
        variable_types: List[TypeTag] = []
        seen_call = False
        for index, statement in enumerate(statements):
            if statement.target != index:
                raise ProgramTypeError("Statement targets must follow statement order", index, index, statement.target)
            if statement.is_input:
                if seen_call:
                    raise ProgramTypeError("Input declarations must precede all calls", index)
                variable_types.append(statement.kind.type_tag)
            else:
                seen_call = True
                variable_types.append(check_call(statement.kind, variable_types, index))
        num_inputs = sum(1 for s in statements if s.is_input)
        if not 1 <= num_inputs <= MAX_INPUTS:
            raise ProgramTypeError(f"Programs take 1 to {MAX_INPUTS} inputs", 0, MAX_INPUTS, num_inputs)
        if not seen_call:
            raise ProgramTypeError("Programs need at least one call", len(statements) - 1)
        return tuple(variable_types)

    def __setattr__(self, key, value):
        raise AttributeError("Program is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Program) and self.statements == other.statements

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.statements)

    def __repr__(self) -> str:
        from .text import format_program

        return f"Program({format_program(self)!r})"

    def __getstate__(self):
        return self.statements

    def __setstate__(self, state):
        object.__setattr__(self, "statements", state)
        object.__setattr__(self, "variable_types", self._check(state))
        object.__setattr__(self, "_hash", hash(state))

    @property
    def input_types(self) -> Tuple[TypeTag, ...]:
        return tuple(s.kind.type_tag for s in self.statements if s.is_input)

    @property
    def num_inputs(self) -> int:
        return len(self.input_types)

    @property
    def output_type(self) -> TypeTag:
        return self.variable_types[-1]

    @property
    def length(self) -> int:
        """T, the number of call statements"""
        return len(self.statements) - self.num_inputs

    def calls(self) -> Iterator[Call]:
        return (s.kind for s in self.statements if not s.is_input)

    def extend(self, call: Call) -> "Program":
        """Program with one more call; only the new call is type-checked"""
        index = len(self.statements)
        if index >= MAX_STATEMENTS:
            raise ProgramTypeError(f"Programs are capped at {MAX_STATEMENTS} statements", index)
        return_type = check_call(call, self.variable_types, index)
        statements = self.statements + (Statement(index, call),)
        extended = object.__new__(Program)
        object.__setattr__(extended, "statements", statements)
        object.__setattr__(extended, "variable_types", self.variable_types + (return_type,))
        object.__setattr__(extended, "_hash", hash(statements))
        return extended

    def live_variables(self) -> Tuple[bool, ...]:
        """Flags telling, for each variable, whether it lies on the dataflow path to the output"""
        live = [False] * len(self.statements)
        live[-1] = True
        for index in range(len(self.statements) - 1, -1, -1):
            statement = self.statements[index]
            if live[index] and not statement.is_input:
                for arg in statement.kind.args:
                    if not isinstance(arg, Constant):
                        live[arg] = True
        return tuple(live)

    def has_dead_variable(self) -> bool:
        return not all(self.live_variables())
