import os
from collections.abc import MutableMapping
from typing import Any, AnyStr, Mapping

from .parameter import SynthParameter


class SynthConfig(MutableMapping):
    """Mapping structure containing SynthParameter objects. It behaves as a dict with the following differences:
        - You can access elements with a dot structure (Example: config.length or config["length"])
        - You can set an element with a dot structure (Example: config.length = 3)
        - All objects stored are converted in SynthParameter, so checks run on every assignment
        - Accessing an element returns the value of the SynthParameter
        - A parameter given without value is looked up in environment variables, e.g. SYNTHLIB__SEED

    Attributes:
        config(dict): Dict storing the SynthParameters
    """
    DEFAULT_ENV_PREFIX = "SYNTHLIB__"

    def __init__(self, env_vars: Mapping = None, env_prefix: AnyStr = DEFAULT_ENV_PREFIX, **kwargs):
        """Initialization method for the SynthConfig class

        Args:
            env_vars(Mapping, optional): Where to look for fallback values. Default is os.environ
            env_prefix(str, optional): Prefix added to the upper-cased parameter name when looking it up
            **kwargs: Each key is a parameter name and each value a dict with at least a "value" field.
                For other fields, see SynthParameter help.
        """
        object.__setattr__(self, 'config', {})
        object.__setattr__(self, 'env_vars', os.environ if env_vars is None else env_vars)
        object.__setattr__(self, 'env_prefix', env_prefix)
        for name, param_kwargs in kwargs.items():
            if 'value' not in param_kwargs:
                raise ValueError('Each init kwargs must have a "value" field.')
            param_kwargs = dict(param_kwargs)
            value = param_kwargs.pop('value')
            self.add_param(name=name, value=value, **param_kwargs)

    def add_param(self, name: AnyStr, value: Any = None, **kwargs):
        """Add a new SynthParameter to the config

        Args:
            name(str): The name of the parameter
            value(Any, optional): The value of the parameter. If None, the environment fallback is used
            **kwargs: Other arguments. See SynthParameter help.
        """
        if value is None:
            value = self._get_env_var(name)
        self.config[name] = SynthParameter(name=name, value=value, **kwargs)

    def get_param(self, name: AnyStr) -> SynthParameter:
        return self.config.get(name)

    def _get_env_var(self, name: AnyStr) -> Any:
        key = f"{self.env_prefix}{str(name).upper().replace('-', '_')}"
        return self.env_vars.get(key)

    def __delitem__(self, item):
        del self.config[item]

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

    def __setattr__(self, key, value):
        self[key] = value

    def __getitem__(self, item):
        if item in self.config:
            return self.config[item].value
        raise KeyError(item)

    def __setitem__(self, key, value):
        self.add_param(name=key, value=value)

    def __iter__(self):
        return iter(self.config)

    def __len__(self):
        return len(self.config)

    def __repr__(self):
        return self.config.__repr__()
