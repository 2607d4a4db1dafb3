"""Trajectory generation, seeded noise, and the filter comparison harness.

One comparison run generates a truth trajectory, adds one seeded noise
realization, feeds the identical measurements to both filters, and sums the
absolute errors against the truth.  Monte Carlo repeats that with seeds
base_seed + run index, so each run is independently replayable.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .inference import DEFAULT_CONFIG, InferenceConfig
from .kalman import run_kalman
from .noise import gaussian_noise
from .tracking import MeasurementSeries, run_filter

FAMILIES = ("exp-growth", "exp-saturating")

# Stand-in trajectory defaults; both are smooth exponentials sampled at
# one-unit periods for 100 steps.
GROWTH_DEFAULT_C1 = 1.0
GROWTH_DEFAULT_C2 = 0.05
SATURATING_DEFAULT_C1 = 5.0
SATURATING_DEFAULT_C2 = 0.1
DEFAULT_STEPS = 100
DEFAULT_PERIOD = 1.0

# Measurement noise variance must stay below the baseline's assumed 0.5.
MAX_NOISE_VARIANCE = 0.5
DEFAULT_NOISE_VARIANCE = 0.25


@dataclass(frozen=True)
class TrajectorySpec:
    """One truth trajectory: family, coefficients, length, sampling period."""

    family: str
    c1: float
    c2: float
    steps: int
    period: float = DEFAULT_PERIOD

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameterError(
                f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.steps < 1:
            raise InvalidParameterError("steps must be >= 1")
        if not self.period > 0:
            raise InvalidParameterError("period must be positive")
        if not (math.isfinite(self.c1) and math.isfinite(self.c2)):
            raise InvalidParameterError("coefficients must be finite")


def growth_default(steps: int = DEFAULT_STEPS,
                   period: float = DEFAULT_PERIOD) -> TrajectorySpec:
    return TrajectorySpec("exp-growth", GROWTH_DEFAULT_C1, GROWTH_DEFAULT_C2,
                          steps, period)


def saturating_default(steps: int = DEFAULT_STEPS,
                       period: float = DEFAULT_PERIOD) -> TrajectorySpec:
    return TrajectorySpec("exp-saturating", SATURATING_DEFAULT_C1,
                          SATURATING_DEFAULT_C2, steps, period)


@dataclass(frozen=True)
class NoiseSpec:
    """Measurement noise: variance (below 0.5) and the stream seed."""

    variance: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.variance < MAX_NOISE_VARIANCE:
            raise InvalidParameterError(
                f"variance must be in [0, {MAX_NOISE_VARIANCE}), "
                f"got {self.variance}")


@dataclass(frozen=True)
class RunResult:
    """Error sums of one comparison run; fuzzy_wins means C1 < C2."""

    run: int
    seed: int
    fuzzy_error: float
    kalman_error: float
    fuzzy_wins: bool


@dataclass(frozen=True)
class MonteCarloSummary:
    """Per-run results (sorted by run index) and the fuzzy win fraction."""

    results: tuple

    @property
    def win_rate(self) -> float:
        if not self.results:
            return 0.0
        return sum(r.fuzzy_wins for r in self.results) / len(self.results)


def gen_trajectory(spec: TrajectorySpec) -> np.ndarray:
    """Truth positions at sample times k*period, k = 1..steps."""
    t = np.arange(1, spec.steps + 1) * spec.period
    if spec.family == "exp-growth":
        return spec.c1 * np.exp(spec.c2 * t)
    return spec.c1 * (1.0 - np.exp(-spec.c2 * t))


def add_noise(truth, noise: NoiseSpec,
              period: float = DEFAULT_PERIOD) -> MeasurementSeries:
    """Add one seeded Gaussian noise realization to a truth series."""
    truth = np.asarray(truth, dtype=float)
    deltas = gaussian_noise(noise.seed, truth.shape[0], noise.variance)
    return MeasurementSeries.from_values(truth + deltas, period)


def error_sum(filtered, truth) -> float:
    """Sum of absolute filtering errors against the truth series."""
    filtered = np.asarray(filtered, dtype=float)
    truth = np.asarray(truth, dtype=float)
    if filtered.shape != truth.shape:
        raise InvalidParameterError(
            f"length mismatch: {filtered.shape[0]} vs {truth.shape[0]}")
    return float(np.abs(filtered - truth).sum())


def run_comparison(traj: TrajectorySpec, noise: NoiseSpec,
                   cfg: InferenceConfig = DEFAULT_CONFIG,
                   process_var: float = 1.0, meas_var: float = 0.5,
                   run_index: int = 0) -> RunResult:
    """Run both filters on one noisy realization of one trajectory."""
    truth = gen_trajectory(traj)
    measured = add_noise(truth, noise, traj.period)
    fuzzy_err = error_sum(run_filter(measured, cfg), truth)
    kalman_err = error_sum(run_kalman(measured, process_var, meas_var), truth)
    return RunResult(run=run_index, seed=noise.seed, fuzzy_error=fuzzy_err,
                     kalman_error=kalman_err, fuzzy_wins=fuzzy_err < kalman_err)


def monte_carlo(traj: TrajectorySpec, variance: float, base_seed: int,
                runs: int = 30, cfg: InferenceConfig = DEFAULT_CONFIG,
                process_var: float = 1.0, meas_var: float = 0.5,
                workers: int = 1) -> MonteCarloSummary:
    """Repeat run_comparison with seeds base_seed + i for i = 0..runs-1.

    Runs are independent; with workers > 1 they execute in parallel and the
    summary is identical to the serial one.
    """
    if runs < 1:
        raise InvalidParameterError("runs must be >= 1")

    def one(i):
        return run_comparison(traj, NoiseSpec(variance, base_seed + i),
                              cfg, process_var, meas_var, run_index=i)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, range(runs)))
    else:
        results = [one(i) for i in range(runs)]
    results.sort(key=lambda r: r.run)
    return MonteCarloSummary(results=tuple(results))
