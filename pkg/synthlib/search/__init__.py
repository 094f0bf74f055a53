########################################################
# ------------- synthlib.search: 0.1.0 ----------------

# Guided depth-first search and Sort-and-add over DSL programs,
# with ranking analysis and throughput measurement
# Library version: 0.1.0
#########################################################

from .guidance import GuidanceVector  # noqa
from .dfs import (  # noqa
    DEFAULT_CONSTANTS,
    BudgetTracker,
    DepthFirstSearch,
    SearchBudget,
    SearchResult,
    SearchSpace,
    SearchStatus,
    dfs,
)
from .sort_and_add import SortAndAddSchedule, active_steps, sort_and_add  # noqa
from .analysis import ActiveSetSize, BoundCheck, bound_check, count_search_space, rank_loss, required_active_size  # noqa
from .throughput import ThroughputReport, measure_throughput, synthetic_task  # noqa
