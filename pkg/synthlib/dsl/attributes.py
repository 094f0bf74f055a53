# -*- coding: utf-8 -*-
"""Module with binary attribute vectors: which catalog entries a program uses"""

from typing import AnyStr, Iterable, List, Tuple

from .catalog import NUM_ATTRIBUTES, attribute_names, function_index, lambda_index
from .program import Program


class AttributeVector:
    """34 presence bits in catalog order

    Attributes:
        bits (tuple): Booleans, bit i is set iff catalog entry i occurs in the program

    """

    __slots__ = ("bits",)

    def __init__(self, bits: Iterable[bool]):
        bits = tuple(bool(bit) for bit in bits)
        if len(bits) != NUM_ATTRIBUTES:
            raise ValueError(f"Attribute vectors have {NUM_ATTRIBUTES} entries, got {len(bits)}")
        self.bits = bits

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "AttributeVector":
        indices = set(indices)
        return cls(i in indices for i in range(NUM_ATTRIBUTES))

    def indices(self) -> List[int]:
        return [i for i, bit in enumerate(self.bits) if bit]

    def names(self) -> List[AnyStr]:
        names = attribute_names()
        return [names[i] for i in self.indices()]

    @property
    def count(self) -> int:
        """C_P, the number of distinct attributes present"""
        return sum(self.bits)

    def to_list(self) -> List[int]:
        return [int(bit) for bit in self.bits]

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> bool:
        return self.bits[index]

    def __iter__(self):
        return iter(self.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, AttributeVector) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"AttributeVector({self.names()})"


def attribute_indices(program: Program) -> Tuple[int, ...]:
    indices = set()
    for call in program.calls():
        indices.add(function_index(call.function))
        if call.lambda_id is not None:
            indices.add(lambda_index(call.lambda_id))
    return tuple(sorted(indices))


def attribute_vector(program: Program) -> AttributeVector:
    """Presence bitmap of a program; a higher-order call sets both its function bit and its lambda bit"""
    return AttributeVector.from_indices(attribute_indices(program))
