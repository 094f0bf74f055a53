########################################################
# ------------- synthlib.dsl: 0.1.0 ----------------

# Abstract syntax, catalog, type system, attributes and text format
# of the list-manipulation DSL
# Library version: 0.1.0
#########################################################

from .catalog import (  # noqa
    FunctionId,
    LambdaId,
    LambdaClass,
    TypeTag,
    AttributeKind,
    Step,
    catalog,
    steps,
    attribute_names,
    NUM_ATTRIBUTES,
    MAX_ARRAY_LENGTH,
    MAX_INPUTS,
    MIN_INT,
    MAX_INT,
)
from .errors import DSLError, ProgramSyntaxError, ProgramTypeError, UnknownIdentifierError  # noqa
from .program import Call, Constant, InputDecl, Program, Statement  # noqa
from .attributes import AttributeVector, attribute_vector  # noqa
from .text import format_program, parse_program  # noqa
