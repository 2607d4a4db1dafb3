"""Linguistic labels, bell-shaped fuzzy sets, and the 13-set partition.

The working universe is the normalized interval [-6a, 6a], where the scale
``a`` is the full width at half maximum of the bell curves, 2*sigma*sqrt(2*ln 2).
With that choice adjacent sets cross at membership exactly 0.5 and every
membership value reduces to 2**(-4*d*d) for a center distance of d*a, which
is what makes the controller output independent of sigma.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidParameterError

# Labels in partition order, widest positive set first.  Letters read
# positive/negative, zero, small/medium/big, with "v" strengthening.
LABELS = ("pvvb", "pvb", "pb", "pm", "ps", "pvs", "ze",
          "nvs", "ns", "nm", "nb", "nvb", "nvvb")

# Set centers in multiples of the scale a, aligned with LABELS.  The two end
# sets sit half a step inside the universe edge (their support is one a wide,
# the rest are two a wide).
CENTER_UNITS = (5.5, 5.0, 4.0, 3.0, 2.0, 1.0, 0.0,
                -1.0, -2.0, -3.0, -4.0, -5.0, -5.5)

_SUPPORT_UNITS = ((5.0, 6.0), (4.0, 6.0), (3.0, 5.0), (2.0, 4.0), (1.0, 3.0),
                  (0.0, 2.0), (-1.0, 1.0), (-2.0, 0.0), (-3.0, -1.0),
                  (-4.0, -2.0), (-5.0, -3.0), (-6.0, -4.0), (-6.0, -5.0))


def negate_label(label: str) -> str:
    """Mirror a label across zero: pvvb <-> nvvb, ..., ze <-> ze."""
    if label == "ze":
        return "ze"
    if label not in LABELS:
        raise InvalidParameterError(f"unknown label {label!r}")
    prefix = "n" if label[0] == "p" else "p"
    return prefix + label[1:]


def half_width(sigma: float) -> float:
    """Partition scale a for a given bell width: 2*sigma*sqrt(2*ln 2).

    This is the full width at half maximum, so sets whose centers are one
    scale apart meet at membership 0.5.
    """
    if not sigma > 0:
        raise InvalidParameterError(f"sigma must be positive, got {sigma}")
    return 2.0 * sigma * math.sqrt(2.0 * math.log(2.0))


@dataclass(frozen=True)
class FuzzySet:
    """One labeled bell-shaped set over the normalized universe."""

    label: str
    center: float
    support_lo: float
    support_hi: float
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise InvalidParameterError("sigma must be positive")
        mid = 0.5 * (self.support_lo + self.support_hi)
        if abs(mid - self.center) > 1e-12 * max(1.0, abs(self.center)):
            raise InvalidParameterError(
                f"center of {self.label!r} is not the support midpoint")

    def membership(self, y: float) -> float:
        """Untruncated Gaussian degree of membership at y."""
        d = y - self.center
        return math.exp(-(d * d) / (2.0 * self.sigma * self.sigma))


@dataclass(frozen=True)
class Partition:
    """The ordered 13-set partition of [-6a, 6a]."""

    sets: tuple
    sigma: float
    scale: float

    @classmethod
    def build(cls, sigma: float = 1.0) -> "Partition":
        a = half_width(sigma)
        sets = tuple(
            FuzzySet(label, units * a, lo * a, hi * a, sigma)
            for label, units, (lo, hi) in zip(LABELS, CENTER_UNITS, _SUPPORT_UNITS)
        )
        return cls(sets=sets, sigma=sigma, scale=a)

    @property
    def universe(self) -> tuple:
        return (-6.0 * self.scale, 6.0 * self.scale)

    def __getitem__(self, label: str) -> FuzzySet:
        for s in self.sets:
            if s.label == label:
                return s
        raise KeyError(label)

    def memberships(self, y: float) -> np.ndarray:
        """Membership of every set at y, in partition order."""
        centers = np.array([s.center for s in self.sets])
        return np.exp(-((y - centers) ** 2) / (2.0 * self.sigma ** 2))


@lru_cache(maxsize=16)
def get_partition(sigma: float = 1.0) -> Partition:
    return Partition.build(sigma)


def fuzzify(y: float, partition: Partition) -> dict:
    """Map a crisp normalized value to its membership in every set.

    Returns a dict keyed by label, in partition order.
    """
    values = partition.memberships(y)
    return {s.label: float(v) for s, v in zip(partition.sets, values)}
