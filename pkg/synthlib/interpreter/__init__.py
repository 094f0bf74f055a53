########################################################
# ------------- synthlib.interpreter: 0.1.0 ----------------

# Evaluation of DSL programs with Null propagation and prefix caching
# Library version: 0.1.0
#########################################################

from .semantics import Value, SignatureError, apply, compile_step, to_json, to_value, value_type  # noqa
from .examples import Example, ExampleSet, InputSignatureError, within_bounds  # noqa
from .interpreter import Environment, check_inputs, consistent, evaluate, run_program  # noqa
from .cache import PrefixCache, PrefixCacheMiss, run_with_cache  # noqa
