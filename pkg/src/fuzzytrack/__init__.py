"""Fuzzy-rule tracking filter with a scalar Kalman baseline.

The public surface mirrors the layer structure: membership partition and
controller (inference), the heading-space tracking filter (tracking), the
Kalman baseline (kalman), deterministic noise (noise), and the comparison
harness (simulate).  The grid kernel runs compiled when the extension was
built; `backend_name()` reports which one is live.
"""

from .backend import backend_name
from .errors import (DataFormatError, DegenerateAggregateError, DomainError,
                     InvalidParameterError, SequencingError)
from .inference import (DEFAULT_CONFIG, RULE_BASE, InferenceConfig,
                        acl_membership, controller, controller_profile,
                        defuzzify_centroid, map_input, map_output,
                        unmap_output)
from .kalman import KalmanState, kalman_step, run_kalman
from .membership import (CENTER_UNITS, LABELS, FuzzySet, Partition, fuzzify,
                         get_partition, half_width, negate_label)
from .noise import SplitMix64, gaussian_noise, standard_normals
from .simulate import (MonteCarloSummary, NoiseSpec, RunResult,
                       TrajectorySpec, add_noise, error_sum, gen_trajectory,
                       growth_default, monte_carlo, run_comparison,
                       saturating_default)
from .tracking import (FilterState, MeasurementSeries, angle_difference,
                       filter_step, heading, run_filter)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG", "RULE_BASE", "LABELS", "CENTER_UNITS",
    "InferenceConfig", "FuzzySet", "Partition", "FilterState",
    "MeasurementSeries", "KalmanState", "TrajectorySpec", "NoiseSpec",
    "RunResult", "MonteCarloSummary", "SplitMix64",
    "backend_name", "negate_label", "half_width", "get_partition", "fuzzify",
    "map_input", "map_output", "unmap_output", "acl_membership",
    "defuzzify_centroid", "controller", "controller_profile",
    "heading", "angle_difference", "filter_step", "run_filter",
    "kalman_step", "run_kalman", "standard_normals", "gaussian_noise",
    "gen_trajectory", "add_noise", "error_sum", "run_comparison",
    "monte_carlo", "growth_default", "saturating_default",
    "InvalidParameterError", "DomainError", "SequencingError",
    "DegenerateAggregateError", "DataFormatError",
]
