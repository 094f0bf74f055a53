import logging
import math
from pathlib import Path
from typing import Any, Callable, Dict, NamedTuple

logger = logging.getLogger(__name__)


class CustomCheckError(Exception):
    """Exception raised when condition of CustomCheck are not met.
    """
    pass


class _Rule(NamedTuple):
    predicate: Callable[[Any, Any], bool]
    message: str


RULES: Dict[str, _Rule] = {}


def rule(name: str, message: str):
    """Register a check under a name usable as CustomCheck(type=name)"""
    def register(predicate: Callable[[Any, Any], bool]) -> Callable[[Any, Any], bool]:
        RULES[name] = _Rule(predicate, message)
        return predicate
    return register


@rule('exists', 'This field is required.')
def _exists(value, op) -> bool:
    return value not in ([], (), "", None)


@rule('in', 'Should be one of {op} (Currently {value}).')
def _in(value, op) -> bool:
    return value in op


@rule('sup', 'Should be greater than {op} (Currently {value}).')
def _sup(value, op) -> bool:
    return value > float(op)


@rule('sup_eq', 'Should be greater than or equal to {op} (Currently {value}).')
def _sup_eq(value, op) -> bool:
    return value >= float(op)


@rule('inf_eq', 'Should be less than or equal to {op} (Currently {value}).')
def _inf_eq(value, op) -> bool:
    return value <= float(op)


@rule('between', 'Should be between {op[0]} and {op[1]} inclusive (Currently {value}).')
def _between(value, op) -> bool:
    return float(op[0]) <= value <= float(op[1])


@rule('finite', 'Should be a finite number (Currently {value}).')
def _finite(value, op) -> bool:
    return math.isfinite(value)


@rule('is_type', 'Should be of type {op.__name__} (Currently {value_type.__name__}).')
def _is_type(value, op) -> bool:
    return isinstance(value, op)


@rule('is_castable', 'Should be castable to {op.__name__} (Currently {value!r} of type {value_type.__name__}).')
def _is_castable(value, op) -> bool:
    try:
        op(value)
    except (TypeError, ValueError):
        return False
    return True


@rule('is_subset', 'Should only contain values from {op} (Currently {value}).')
def _is_subset(value, op) -> bool:
    return set(value).issubset(op)


@rule('path_exists', 'File or folder does not exist: {value}.')
def _path_exists(value, op) -> bool:
    return Path(value).exists()


@rule('parent_exists', 'Cannot write {value}: folder {parent} does not exist.')
def _parent_exists(value, op) -> bool:
    return Path(value).resolve().parent.is_dir()


@rule('custom', 'There has been an unknown error.')
def _custom(value, op) -> bool:
    return bool(op)


class CustomCheck:
    """One named check on a parameter value. Use run() to verify whether the check fails or pass

    Attributes:
        type (str): Name of a registered rule
        op (Any, optional): Operand to compare the value to. Unnecessary for some checks
        err_msg (str, optional): Custom message to display if check fails. Default is the rule's message
    """
    def __init__(self, type: str, op: Any = None, err_msg: str = ''):
        if type not in RULES:
            raise CustomCheckError(f'Check of type {type} does not exist.')
        self.type = type
        self.op = op
        self.err_msg = err_msg or RULES[type].message

    def run(self, value: Any = None):
        """Runs the check on a value

        Raises:
            CustomCheckError if check fails
        """
        if not RULES[self.type].predicate(value, self.op):
            raise CustomCheckError(self.format_err_msg(value))

    def format_err_msg(self, value: Any) -> str:
        parent = Path(value).parent if isinstance(value, (str, Path)) else None
        return self.err_msg.format(value=value, op=self.op, value_type=type(value), parent=parent)

    def __repr__(self):
        return f"CustomCheck(type={self.type}, op={self.op})"
