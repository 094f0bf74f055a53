# -*- coding: utf-8 -*-
"""Exceptions raised when building, parsing or type-checking DSL programs"""

from typing import AnyStr, Optional


class DSLError(ValueError):
    """Base class for invalid programs"""


class ProgramSyntaxError(DSLError):
    """Custom exception raised when program text does not follow the grammar"""

    def __init__(self, message: AnyStr, line: int, column: int, token: Optional[AnyStr] = None):
        self.line = line
        self.column = column
        self.token = token
        location = f"line {line}, column {column}"
        if token is not None:
            location += f", token '{token}'"
        super().__init__(f"{message} ({location})")


class ProgramTypeError(DSLError):
    """Custom exception raised when a statement is not well-typed"""

    def __init__(self, message: AnyStr, statement_index: int, expected=None, actual=None):
        self.statement_index = statement_index
        self.expected = expected
        self.actual = actual
        details = f"statement {statement_index}"
        if expected is not None or actual is not None:
            details += f", expected {expected}, got {actual}"
        super().__init__(f"{message} ({details})")


class UnknownIdentifierError(DSLError):
    """Custom exception raised on an unknown function, lambda or variable name"""

    def __init__(self, identifier: AnyStr, line: int, column: int):
        self.identifier = identifier
        self.line = line
        self.column = column
        super().__init__(f"Unknown identifier '{identifier}' (line {line}, column {column})")
