"""Scalar Kalman filter baseline (identity state/input/output model).

The state, input, and measurement matrices are all 1, so prediction leaves
the estimate unchanged and only inflates the covariance by the process
variance.  Used as the comparison baseline for the heading-space filter.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .tracking import MeasurementSeries


@dataclass(frozen=True)
class KalmanState:
    """Estimate, covariance, and the fixed noise variances."""

    estimate: float
    covariance: float
    process_var: float = 1.0
    meas_var: float = 0.5

    def __post_init__(self):
        if not self.covariance > 0:
            raise InvalidParameterError("covariance must be positive")
        if self.process_var < 0:
            raise InvalidParameterError("process variance must be >= 0")
        if not self.meas_var > 0:
            raise InvalidParameterError("measurement variance must be positive")


def kalman_step(z: float, state: KalmanState):
    """One predict/update cycle; returns (new estimate, new state).

    The gain is always strictly inside (0, 1), so the new estimate is a
    convex combination of the old estimate and the measurement.
    """
    p_pred = state.covariance + state.process_var
    gain = p_pred / (p_pred + state.meas_var)
    covariance = (1.0 - gain) * p_pred
    estimate = state.estimate + gain * (z - state.estimate)
    return estimate, KalmanState(estimate=estimate, covariance=covariance,
                                 process_var=state.process_var,
                                 meas_var=state.meas_var)


def run_kalman(series: MeasurementSeries, process_var: float = 1.0,
               meas_var: float = 0.5, initial_covariance: float = 1.0) -> np.ndarray:
    """Filter a measurement series; the estimate starts at the first sample."""
    if len(series) == 0:
        return np.empty(0)
    state = KalmanState(estimate=float(series.values[0]),
                        covariance=initial_covariance,
                        process_var=process_var, meas_var=meas_var)
    out = np.empty(len(series))
    out[0] = state.estimate
    for i, z in enumerate(series.values[1:], start=1):
        out[i], state = kalman_step(z, state)
    return out
