# -*- coding: utf-8 -*-
"""Module with the canonical text format of DSL programs

Grammar, one statement per line:

    line   := VAR "<-" (TYPE | CALL)
    TYPE   := "int" | "[int]"
    CALL   := FUNC [LAMBDA] ARG{1,2}
    ARG    := VAR | [0-9]+

Canonical text names variables a, b, c, ... in statement order and has no trailing newline.
"""

from string import ascii_lowercase
from typing import AnyStr, Dict, List

import regex as re

from .catalog import FUNCTION_SIGNATURES, FunctionId, LambdaId, TypeTag
from .errors import ProgramSyntaxError, UnknownIdentifierError
from .program import Call, Constant, InputDecl, Program, Statement

TOKEN_REGEX = re.compile(r"\S+")
VARIABLE_REGEX = re.compile(r"[a-z]")
LITERAL_REGEX = re.compile(r"[0-9]+")
ASSIGNMENT = "<-"

FUNCTIONS_BY_TOKEN = {function.value: function for function in FunctionId}
LAMBDAS_BY_TOKEN = {lambda_id.value: lambda_id for lambda_id in LambdaId}
TYPES_BY_TOKEN = {type_tag.value: type_tag for type_tag in TypeTag}


def _variable_name(index: int) -> AnyStr:
    return ascii_lowercase[index]


def format_program(program: Program) -> AnyStr:
    """Render a program in canonical text, e.g. "a <- [int]\\nb <- SORT a" """
    lines = []
    for statement in program.statements:
        target = _variable_name(statement.target)
        if statement.is_input:
            lines.append(f"{target} {ASSIGNMENT} {statement.kind.type_tag.value}")
            continue
        call = statement.kind
        tokens = [call.function.value]
        if call.lambda_id is not None:
            tokens.append(call.lambda_id.value)
        tokens += [str(arg.value) if isinstance(arg, Constant) else _variable_name(arg) for arg in call.args]
        lines.append(f"{target} {ASSIGNMENT} {' '.join(tokens)}")
    return "\n".join(lines)


def _parse_line(line: AnyStr, line_number: int, variables: Dict[AnyStr, int]) -> Statement:
    tokens = [(m.group(), m.start() + 1) for m in TOKEN_REGEX.finditer(line)]
    if len(tokens) < 3:
        column = tokens[-1][1] if tokens else 1
        raise ProgramSyntaxError("Expected 'VAR <- TYPE' or 'VAR <- FUNC ...'", line_number, column)
    (target, target_column), (arrow, arrow_column) = tokens[0], tokens[1]
    if not VARIABLE_REGEX.fullmatch(target):
        raise ProgramSyntaxError("Expected a single lower-case variable", line_number, target_column, target)
    if target in variables:
        raise ProgramSyntaxError("Variable assigned twice", line_number, target_column, target)
    if arrow != ASSIGNMENT:
        raise ProgramSyntaxError(f"Expected '{ASSIGNMENT}'", line_number, arrow_column, arrow)
    index = len(variables)
    head, head_column = tokens[2]
    if head in TYPES_BY_TOKEN:
        if len(tokens) > 3:
            raise ProgramSyntaxError("Unexpected token after type", line_number, tokens[3][1], tokens[3][0])
        variables[target] = index
        return Statement(index, InputDecl(TYPES_BY_TOKEN[head]))
    if head not in FUNCTIONS_BY_TOKEN:
        raise UnknownIdentifierError(head, line_number, head_column)
    function = FUNCTIONS_BY_TOKEN[head]
    rest = tokens[3:]
    lambda_id = None
    if FUNCTION_SIGNATURES[function].is_higher_order:
        if not rest:
            raise ProgramSyntaxError(f"{head} expects a lambda", line_number, head_column, head)
        token, column = rest[0]
        if token not in LAMBDAS_BY_TOKEN:
            raise UnknownIdentifierError(token, line_number, column)
        lambda_id = LAMBDAS_BY_TOKEN[token]
        rest = rest[1:]
    if not 1 <= len(rest) <= 2:
        column = rest[2][1] if len(rest) > 2 else head_column
        raise ProgramSyntaxError("Expected one or two arguments", line_number, column)
    args = []
    for token, column in rest:
        if LITERAL_REGEX.fullmatch(token):
            args.append(Constant(int(token)))
        elif VARIABLE_REGEX.fullmatch(token):
            if token not in variables:
                raise UnknownIdentifierError(token, line_number, column)
            args.append(variables[token])
        else:
            raise ProgramSyntaxError("Expected a variable or an integer literal", line_number, column, token)
    variables[target] = index
    return Statement(index, Call(function, lambda_id, tuple(args)))


def parse_program(text: AnyStr) -> Program:
    """Parse program text into a well-typed Program

    Args:
        text: Program text following the grammar of this module. Any lower-case letters may name variables.

    Returns:
        Program whose canonical text is `format_program(parse_program(text))`

    Raises:
        ProgramSyntaxError: With line, column and offending token
        UnknownIdentifierError: On an unknown function, lambda or variable
        ProgramTypeError: With statement index, expected and actual types

    """
    variables: Dict[AnyStr, int] = {}
    statements: List[Statement] = []
    lines = text.rstrip("\n").split("\n")
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            raise ProgramSyntaxError("Empty line", line_number, 1)
        statements.append(_parse_line(line, line_number, variables))
    return Program(statements)
