########################################################
# ------------- synthlib.parallelizer: 0.1.0 ----------------

# Row-wise task execution over a pandas DataFrame on a thread or
# process pool, with error columns and a progress bar
# Library version: 0.1.0
#########################################################

from .parallelizer import ErrorHandling, PoolKind, TaskParallelizer, TaskResultError  # noqa
