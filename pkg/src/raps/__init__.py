"""Outlier-robust state estimation via risk-averse, performance-specified
measurement selection, with Kalman-filter and threshold-decision baselines
and a reproducible simulation harness."""

__version__ = "0.1.0"

from .types import (  # noqa: F401
    InfoSpec,
    MeasurementBatch,
    SelectionVector,
    SolveReport,
    SolveStatus,
    StateBelief,
)
from .dynamics import DiscreteModel, PvaParams, discretize_pva, propagate  # noqa: F401
from .estimators import (  # noqa: F401
    TdConfig,
    kf_update,
    map_update_with_selection,
    td_select,
    td_update,
)
