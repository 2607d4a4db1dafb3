"""Pure numpy implementation of the aggregation/centroid grid kernel.

Mirrors the compiled kernel in fuzzytrack._kernel.  Sums are accumulated in
symmetric pairs (node j with node n-1-j) so that an even aggregate yields a
numerator of exactly zero and mirrored inputs yield exactly negated outputs.
"""

import numpy as np

BACKEND_NAME = "python"


def aggregate(weights, consequents):
    """Max over rules of min(rule weight, consequent membership) per node."""
    w = np.asarray(weights, dtype=np.float64)
    return np.minimum(w[:, None], consequents).max(axis=0)


def centroid_sums(weights, consequents, grid):
    """Endpoint-halved trapezoid sums (numerator, denominator) over the grid.

    The common node spacing is left out of both sums; it cancels in the
    centroid ratio.
    """
    mu = aggregate(weights, consequents)
    return _fold(grid * mu, mu, grid.shape[0])


def centroid_sums_many(weight_rows, consequents, grid):
    rows = np.asarray(weight_rows, dtype=np.float64)
    nums = np.empty(rows.shape[0])
    dens = np.empty(rows.shape[0])
    for i in range(rows.shape[0]):
        nums[i], dens[i] = centroid_sums(rows[i], consequents, grid)
    return nums, dens


def _fold(t_num, t_den, n):
    h = n // 2
    wt = np.ones(n)
    wt[0] = 0.5
    wt[-1] = 0.5
    t_num = wt * t_num
    t_den = wt * t_den
    num = float((t_num[:h] + t_num[h + 1:][::-1]).sum() + t_num[h])
    den = float((t_den[:h] + t_den[h + 1:][::-1]).sum() + t_den[h])
    return num, den
