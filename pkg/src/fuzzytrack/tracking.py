"""Heading-space tracking filter built around the fuzzy controller.

Positions are turned into headings (arctangent of displacement per sampling
period), the controller damps the heading change, and the damped heading is
mapped back to a position.  The first two samples pass through unchanged;
they seed the two filtered positions the heading recursion needs.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidParameterError, SequencingError
from .inference import DEFAULT_CONFIG, InferenceConfig, controller

# The reconstruction tangent is unbounded as the adjusted heading approaches
# +/- pi/2; keep it this far inside.
CLAMP_MARGIN = 1e-3


@dataclass(frozen=True)
class FilterState:
    """Rolling filter state after k consumed measurements.

    x_prev / x_prev2 are the filtered positions at k and k-1;
    heading_prev is the heading between them.  Fields are None until the
    bootstrap (k = 2) has produced them.
    """

    k: int
    x_prev: Optional[float]
    x_prev2: Optional[float]
    heading_prev: Optional[float]
    period: float

    def __post_init__(self):
        if not self.period > 0:
            raise InvalidParameterError("sampling period must be positive")

    @classmethod
    def initial(cls, period: float) -> "FilterState":
        return cls(k=0, x_prev=None, x_prev2=None, heading_prev=None,
                   period=period)


@dataclass(frozen=True)
class MeasurementSeries:
    """Ordered position measurements taken at a fixed sampling period."""

    values: tuple
    period: float

    def __post_init__(self):
        if not self.period > 0:
            raise InvalidParameterError("sampling period must be positive")
        if any(not math.isfinite(v) for v in self.values):
            raise InvalidParameterError("measurements must be finite")

    @classmethod
    def from_values(cls, values, period: float) -> "MeasurementSeries":
        return cls(values=tuple(float(v) for v in values), period=period)

    def __len__(self):
        return len(self.values)


def heading(x_curr: float, x_prev: float, period: float) -> float:
    """Heading angle for a position change over one sampling period."""
    if not period > 0:
        raise InvalidParameterError("sampling period must be positive")
    return math.atan((x_curr - x_prev) / period)


def angle_difference(x_k: float, state: FilterState) -> float:
    """Change in heading implied by the next measurement.

    Requires the bootstrap to be complete (two filtered positions).
    """
    if state.k < 2:
        raise SequencingError(
            f"angle difference needs two filtered positions, have {state.k}")
    return heading(x_k, state.x_prev, state.period) - state.heading_prev


def filter_step(x_k: float, state: FilterState,
                cfg: InferenceConfig = DEFAULT_CONFIG):
    """Consume one measurement; return (filtered position, next state).

    The first two measurements pass through unchanged.  Afterwards the
    adjusted heading is clamped to +/-(pi/2 - CLAMP_MARGIN) before the
    tangent, which bounds the position step.
    """
    k = state.k + 1
    if k <= 2:
        x_filt = float(x_k)
    else:
        theta = angle_difference(x_k, state)
        adjustment = controller(theta, cfg)
        phi = theta + adjustment + state.heading_prev
        limit = math.pi / 2 - CLAMP_MARGIN
        phi = min(max(phi, -limit), limit)
        x_filt = math.tan(phi) * state.period + state.x_prev

    heading_prev = heading(x_filt, state.x_prev, state.period) if k >= 2 else None
    next_state = FilterState(k=k, x_prev=x_filt, x_prev2=state.x_prev,
                             heading_prev=heading_prev, period=state.period)
    return x_filt, next_state


def run_filter(series: MeasurementSeries,
               cfg: InferenceConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Filter a whole measurement series; returns an array of equal length."""
    state = FilterState.initial(series.period)
    out = np.empty(len(series))
    for i, x in enumerate(series.values):
        out[i], state = filter_step(x, state, cfg)
    return out
