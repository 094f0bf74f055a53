import logging
from typing import Any, Dict, List, Optional

from .custom_check import CustomCheck, CustomCheckError

logger = logging.getLogger(__name__)


class SynthParameterError(ValueError):
    """Exception raised when at least one CustomCheck fails.
    """
    pass


class SynthParameter:
    """One validated parameter of a synthlib command or configuration object.

    The value goes through three stages: the default replaces a missing value, then the value is cast,
    then the user checks run. A missing value stops there unless the parameter is required.

    Attributes:
        name(str): Name of the parameter, as the user knows it (e.g. a CLI flag)
        value(Any): Value of the parameter, after default and cast
        checks(list[CustomCheck]): Checks run on the value
        required(bool): Whether the value can be None
        cast_to(type, optional): The type to cast the value to before checks run
    """
    def __init__(
        self,
        name: str,
        value: Any,
        checks: Optional[List[Dict]] = None,
        required: bool = False,
        cast_to: Optional[type] = None,
        default: Any = None,
    ):
        self.name = name
        self.value = default if value is None else value
        self.required = required
        self.cast_to = cast_to
        self.checks = [CustomCheck(**check) for check in checks or []]
        if self._present():
            self._cast()
            self._enforce(self.checks)

    def _present(self) -> bool:
        try:
            CustomCheck(type='exists').run(self.value)
        except CustomCheckError as error:
            if self.required:
                raise SynthParameterError(self.failure(error))
            return False
        return True

    def _cast(self):
        if self.cast_to is None or isinstance(self.value, self.cast_to):
            return
        self._enforce([CustomCheck(type='is_castable', op=self.cast_to)])
        self.value = self.cast_to(self.value)

    def _enforce(self, checks: List[CustomCheck]):
        for check in checks:
            try:
                check.run(self.value)
            except CustomCheckError as error:
                raise SynthParameterError(self.failure(error))
        logger.debug(f'All checks passed successfully for {self.name}.')

    def failure(self, error: CustomCheckError) -> str:
        return f'Validation error with parameter "{self.name}": {error}'

    def __repr__(self):
        return f"SynthParameter(name={self.name}, value={self.value})"

    __str__ = __repr__
