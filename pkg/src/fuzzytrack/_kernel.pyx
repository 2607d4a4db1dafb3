# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled aggregation/centroid grid kernel.

Behaviour matches fuzzytrack._kernel_py: max-min aggregation over the rule
consequent table, then endpoint-halved trapezoid sums accumulated in
symmetric node pairs (which keeps odd symmetry exact).
"""

import numpy as np

BACKEND_NAME = "cython"


cdef inline double _mu_at(const double[::1] weights,
                          const double[:, ::1] cons,
                          Py_ssize_t j) noexcept nogil:
    cdef Py_ssize_t r, nr = cons.shape[0]
    cdef double best = 0.0, fire
    for r in range(nr):
        fire = cons[r, j]
        if weights[r] < fire:
            fire = weights[r]
        if fire > best:
            best = fire
    return best


def aggregate(const double[::1] weights, const double[:, ::1] consequents):
    """Max over rules of min(rule weight, consequent membership) per node."""
    cdef Py_ssize_t n = consequents.shape[1], j
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] mu = out
    with nogil:
        for j in range(n):
            mu[j] = _mu_at(weights, consequents, j)
    return out


cdef void _sums(const double[::1] weights, const double[:, ::1] cons,
                const double[::1] grid,
                double* num, double* den) noexcept nogil:
    cdef Py_ssize_t n = grid.shape[0], h = n // 2, j, jm
    cdef double sn = 0.0, sd = 0.0, m1, m2, wt
    for j in range(h):
        jm = n - 1 - j
        m1 = _mu_at(weights, cons, j)
        m2 = _mu_at(weights, cons, jm)
        wt = 0.5 if j == 0 else 1.0
        sd += wt * (m1 + m2)
        sn += wt * (grid[j] * m1 + grid[jm] * m2)
    m1 = _mu_at(weights, cons, h)
    sd += m1
    sn += grid[h] * m1
    num[0] = sn
    den[0] = sd


def centroid_sums(const double[::1] weights, const double[:, ::1] consequents,
                  const double[::1] grid):
    """Endpoint-halved trapezoid sums (numerator, denominator) over the grid.

    The common node spacing is left out of both sums; it cancels in the
    centroid ratio.
    """
    cdef double num = 0.0, den = 0.0
    with nogil:
        _sums(weights, consequents, grid, &num, &den)
    return num, den


def centroid_sums_many(const double[:, ::1] weight_rows,
                       const double[:, ::1] consequents,
                       const double[::1] grid):
    cdef Py_ssize_t m = weight_rows.shape[0], i
    nums = np.empty(m, dtype=np.float64)
    dens = np.empty(m, dtype=np.float64)
    cdef double[::1] nv = nums
    cdef double[::1] dv = dens
    with nogil:
        for i in range(m):
            _sums(weight_rows[i], consequents, grid, &nv[i], &dv[i])
    return nums, dens
