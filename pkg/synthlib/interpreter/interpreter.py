# -*- coding: utf-8 -*-
"""Module to run DSL programs on concrete inputs"""

from typing import Sequence, Tuple

from ..dsl.program import Constant, Program
from .examples import ExampleSet, InputSignatureError
from .semantics import Value, compile_step, value_type

Environment = Tuple[Value, ...]
"""Values of all variables of a program, aligned with its statements"""


def check_inputs(program: Program, inputs: Sequence[Value]) -> None:
    """Raise InputSignatureError unless inputs match the program's input declarations and contain no Null"""
    expected = program.input_types
    if len(inputs) != len(expected):
        raise InputSignatureError(f"Program takes {len(expected)} input(s), got {len(inputs)}")
    for index, (value, type_tag) in enumerate(zip(inputs, expected)):
        actual = value_type(value)
        if actual != type_tag:
            actual_name = "Null" if actual is None else actual.value
            raise InputSignatureError(f"Input {index} should be {type_tag.value}, got {actual_name}")


def evaluate(program: Program, inputs: Sequence[Value]) -> Environment:
    """Run a program and return the values of all its variables"""
    check_inputs(program, inputs)
    values = list(inputs)
    for statement in program.statements[len(inputs):]:
        call = statement.kind
        args = [arg.value if isinstance(arg, Constant) else values[arg] for arg in call.args]
        values.append(compile_step(call.step)(*args))
    return tuple(values)


def run_program(program: Program, inputs: Sequence[Value]) -> Value:
    """Output of a program on inputs: the value of its last variable"""
    return evaluate(program, inputs)[-1]


def consistent(program: Program, examples: ExampleSet) -> bool:
    """Whether the program reproduces every expected output exactly; Null never matches"""
    if program.input_types != examples.input_types:
        raise InputSignatureError(
            f"Program inputs {[t.value for t in program.input_types]} do not match "
            f"example inputs {[t.value for t in examples.input_types]}"
        )
    for example in examples:
        output = run_program(program, example.inputs)
        if output is None or output != example.output:
            return False
    return True
