# -*- coding: utf-8 -*-
"""Module with input-output examples and example sets"""

from typing import Any, Dict, Iterable, Iterator, NamedTuple, Sequence, Tuple

from ..dsl.catalog import MAX_ARRAY_LENGTH, MAX_INPUTS, MAX_INT, MIN_INT, TypeTag
from .semantics import Value, to_json, to_value, value_type


class InputSignatureError(ValueError):
    """Custom exception raised when inputs do not match a program or example set signature"""


class Example(NamedTuple):
    inputs: Tuple[Value, ...]
    output: Value

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "Example":
        return cls(tuple(to_value(x) for x in obj["inputs"]), to_value(obj["output"]))

    def to_json(self) -> Dict[str, Any]:
        return {"inputs": [to_json(x) for x in self.inputs], "output": to_json(self.output)}

    @property
    def input_types(self) -> Tuple[TypeTag, ...]:
        return tuple(value_type(x) for x in self.inputs)

    @property
    def output_type(self) -> TypeTag:
        return value_type(self.output)


def within_bounds(value: Value, lo: int = MIN_INT, hi: int = MAX_INT, max_length: int = MAX_ARRAY_LENGTH) -> bool:
    """Whether a non-Null value lies in the working integer range and array length bound"""
    if value is None:
        return False
    if isinstance(value, tuple):
        return len(value) <= max_length and all(lo <= x <= hi for x in value)
    return lo <= value <= hi


class ExampleSet:
    """M input-output examples sharing one signature, none of them containing Null

    Attributes:
        examples (tuple): The examples, in the order given

    """

    DEFAULT_NUM_EXAMPLES = 5

    __slots__ = ("examples",)

    def __init__(self, examples: Iterable[Example]):
        examples = tuple(Example(tuple(e.inputs), e.output) for e in examples)
        if not examples:
            raise InputSignatureError("An example set needs at least one example")
        signature = examples[0].input_types
        if not 1 <= len(signature) <= MAX_INPUTS:
            raise InputSignatureError(f"Examples take 1 to {MAX_INPUTS} inputs, got {len(signature)}")
        output_type = examples[0].output_type
        for index, example in enumerate(examples):
            if None in example.input_types or example.output_type is None:
                raise InputSignatureError(f"Example {index} contains Null")
            if example.input_types != signature or example.output_type != output_type:
                raise InputSignatureError(f"Example {index} does not match the signature of example 0")
        self.examples = examples

    @classmethod
    def from_json(cls, objs: Iterable[Dict[str, Any]]) -> "ExampleSet":
        return cls(Example.from_json(obj) for obj in objs)

    def to_json(self):
        return [example.to_json() for example in self.examples]

    @property
    def input_types(self) -> Tuple[TypeTag, ...]:
        return self.examples[0].input_types

    @property
    def output_type(self) -> TypeTag:
        return self.examples[0].output_type

    def inputs(self) -> Tuple[Tuple[Value, ...], ...]:
        return tuple(e.inputs for e in self.examples)

    def outputs(self) -> Tuple[Value, ...]:
        return tuple(e.output for e in self.examples)

    def within_bounds(self) -> bool:
        return all(within_bounds(v) for e in self.examples for v in e.inputs + (e.output,))

    def permuted(self, order: Sequence[int]) -> "ExampleSet":
        return ExampleSet(self.examples[i] for i in order)

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[Example]:
        return iter(self.examples)

    def __getitem__(self, index: int) -> Example:
        return self.examples[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExampleSet) and self.examples == other.examples

    def __hash__(self) -> int:
        return hash(self.examples)

    def __repr__(self) -> str:
        return f"ExampleSet({self.to_json()})"
