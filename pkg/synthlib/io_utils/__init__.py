########################################################
# ------------- synthlib.io_utils: 0.1.0 ----------------

# Versioned file headers, CSV helpers and timing decorator
# Library version: 0.1.0
#########################################################

from .io_utils import *  # noqa
