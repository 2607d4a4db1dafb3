"""Rule base, universe mappings, and the min-max centroid controller.

The controller takes a heading-change angle, fires the 13 mirror rules
(min implication, max aggregation), and returns the centroid of the
aggregated output over the adjustment universe.  Both the input and output
universes are mapped linearly onto the shared normalized universe [-6a, 6a].
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import backend
from .errors import DegenerateAggregateError, DomainError, InvalidParameterError
from .membership import CENTER_UNITS, LABELS, get_partition, half_width, negate_label

# Each input label maps to its sign-mirrored output label; ze maps to itself.
RULE_BASE = tuple((label, negate_label(label)) for label in LABELS)

# Aggregate mass below this is treated as numerically empty.  Unreachable for
# in-universe inputs because the ze->ze rule always fires positively.
_DEGENERATE_FLOOR = 1e-300

# Tolerance for universe-boundary checks: endpoints like theta = pi must pass
# even when 6*gamma differs from pi by a rounding ulp.
_EDGE_SLACK = 1e-9


@dataclass(frozen=True)
class InferenceConfig:
    """Controller parameters.

    sigma scales the bell widths (the output is invariant to it); gamma_in
    and gamma_out are the angles mapped to one normalized scale unit, so the
    universes are [-6*gamma_in, 6*gamma_in] for the input angle and
    [-6*gamma_out, 6*gamma_out] for the adjustment.  grid_points is the
    (odd) number of trapezoid nodes used for the centroid.
    """

    sigma: float = 1.0
    gamma_in: float = math.pi / 6
    gamma_out: float = math.pi / 18
    grid_points: int = 1201

    def __post_init__(self):
        if not self.sigma > 0:
            raise InvalidParameterError("sigma must be positive")
        if not (self.gamma_in > 0 and self.gamma_out > 0):
            raise InvalidParameterError("mapping angles must be positive")
        if self.grid_points < 3 or self.grid_points % 2 == 0:
            raise InvalidParameterError(
                f"grid_points must be odd and >= 3, got {self.grid_points}")

    @property
    def scale(self) -> float:
        return half_width(self.sigma)

    @property
    def input_limit(self) -> float:
        return 6.0 * self.gamma_in

    @property
    def output_limit(self) -> float:
        return 6.0 * self.gamma_out


DEFAULT_CONFIG = InferenceConfig()


def _check_range(value, limit, what):
    if abs(value) > limit * (1.0 + _EDGE_SLACK):
        raise DomainError(f"{what} {value!r} outside [{-limit!r}, {limit!r}]")


def map_input(theta: float, cfg: InferenceConfig = DEFAULT_CONFIG) -> float:
    """Normalize an input angle: theta in [-6*gamma_in, 6*gamma_in] -> [-6a, 6a]."""
    _check_range(theta, cfg.input_limit, "input angle")
    return theta / cfg.gamma_in * cfg.scale


def map_output(theta_adj: float, cfg: InferenceConfig = DEFAULT_CONFIG) -> float:
    """Normalize an adjustment angle onto [-6a, 6a]."""
    _check_range(theta_adj, cfg.output_limit, "adjustment angle")
    return theta_adj / cfg.gamma_out * cfg.scale


def unmap_output(y_o: float, cfg: InferenceConfig = DEFAULT_CONFIG) -> float:
    """Inverse of map_output: normalized value back to an adjustment angle."""
    _check_range(y_o, 6.0 * cfg.scale, "normalized output")
    return y_o / cfg.scale * cfg.gamma_out


@lru_cache(maxsize=16)
def _tables(cfg: InferenceConfig):
    """Per-config quadrature tables: node angles, consequent memberships, centers.

    The grid is built by mirroring the positive nodes so that
    grid[n-1-j] == -grid[j] holds bit-exactly; node h is exactly zero.
    """
    half = (cfg.grid_points - 1) // 2
    pos = np.arange(1, half + 1) * (cfg.output_limit / half)
    pos[-1] = cfg.output_limit
    grid = np.concatenate([-pos[::-1], [0.0], pos])

    a = cfg.scale
    centers = np.array(CENTER_UNITS) * a
    y_nodes = grid / cfg.gamma_out * a
    consequents = np.exp(-((y_nodes[None, :] + centers[:, None]) ** 2)
                         / (2.0 * cfg.sigma ** 2))
    return grid, np.ascontiguousarray(consequents), centers


def _rule_strengths(theta, cfg):
    """Antecedent firing degree of every rule, in rule order."""
    _, _, centers = _tables(cfg)
    y_in = map_input(theta, cfg)
    return np.exp(-((y_in - centers) ** 2) / (2.0 * cfg.sigma ** 2))


def acl_membership(theta: float, theta_adj: float,
                   cfg: InferenceConfig = DEFAULT_CONFIG) -> float:
    """Aggregated "appropriate control" membership at (theta, theta_adj).

    Max over the rules of min(antecedent membership at theta, consequent
    membership at theta_adj).
    """
    partition = get_partition(cfg.sigma)
    y_in = map_input(theta, cfg)
    y_out = map_output(theta_adj, cfg)
    best = 0.0
    for antecedent, consequent in RULE_BASE:
        fire = min(partition[antecedent].membership(y_in),
                   partition[consequent].membership(y_out))
        if fire > best:
            best = fire
    return best


def defuzzify_centroid(theta: float,
                       cfg: InferenceConfig = DEFAULT_CONFIG) -> float:
    """Centroid of the aggregated output over the adjustment universe.

    Trapezoid quadrature on grid_points uniform nodes.  Raises
    DegenerateAggregateError if the aggregate carries no mass (cannot happen
    for an in-universe theta).
    """
    grid, consequents, _ = _tables(cfg)
    weights = _rule_strengths(theta, cfg)
    num, den = backend.centroid_sums(weights, consequents, grid)
    _check_mass(den, cfg)
    return num / den


def controller(theta: float, cfg: InferenceConfig = DEFAULT_CONFIG) -> float:
    """Crisp adjustment angle for a heading-change angle.

    Composition of input mapping, rule firing, aggregation, and centroid
    defuzzification; output lies strictly inside the adjustment universe.
    """
    return defuzzify_centroid(theta, cfg)


def controller_profile(thetas, cfg: InferenceConfig = DEFAULT_CONFIG):
    """Vector of controller outputs for a sequence of input angles."""
    grid, consequents, centers = _tables(cfg)
    y_in = np.array([map_input(t, cfg) for t in np.asarray(thetas, dtype=float)])
    rows = np.exp(-((y_in[:, None] - centers[None, :]) ** 2)
                  / (2.0 * cfg.sigma ** 2))
    nums, dens = backend.centroid_sums_many(np.ascontiguousarray(rows),
                                            consequents, grid)
    for den in dens:
        _check_mass(den, cfg)
    return nums / dens


def _check_mass(den_sum, cfg):
    # den_sum omits the node spacing; restore it for the absolute threshold.
    half = (cfg.grid_points - 1) // 2
    if den_sum * (cfg.output_limit / half) < _DEGENERATE_FLOOR:
        raise DegenerateAggregateError(
            "aggregated rule output has (numerically) no mass")
