########################################################
# ------------- synthlib.config: 0.1.0 ----------------

# Parameter validation for commands, training and search settings
# Library version: 0.1.0
#########################################################

from .custom_check import CustomCheck, CustomCheckError  # noqa
from .parameter import SynthParameter, SynthParameterError  # noqa
from .synth_config import SynthConfig  # noqa
