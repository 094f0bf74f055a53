########################################################
# ------------- synthlib.harness: 0.1.0 ----------------

# Command line, benchmark runner and speedup reports
# Library version: 0.1.0
#########################################################

from .benchmark import (  # noqa
    BenchmarkTask,
    OverlappingTasksError,
    Strategy,
    check_disjoint,
    generate_test_records,
    model_guidances,
    run_benchmark,
    solve_row,
    tasks_from_records,
)
from .report import SpeedupReport, run_generalization_grid, timeout_to_solve  # noqa
