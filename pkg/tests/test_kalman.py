"""Scalar Kalman recursion: worked values, fixed point, and properties."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from fuzzytrack import (InvalidParameterError, KalmanState, MeasurementSeries,
                        kalman_step, run_kalman)

# Steady state for process variance 1, measurement variance 0.5.
P_SS = (math.sqrt(3.0) - 1.0) / 2.0
K_SS = math.sqrt(3.0) - 1.0

RAMP_GOLDEN = [0.0, 0.8, 1.6842105263157894, 2.647887323943662,
               3.637735849056604, 4.634984833164813, 5.6342454619344355,
               6.6340471869328494, 7.6339940477348325, 8.633979808298717,
               9.633975992793648]


def test_step_zero_innovation_keeps_estimate():
    state = KalmanState(estimate=2.5, covariance=1.0)
    est, new = kalman_step(2.5, state)
    assert est == 2.5
    assert new.estimate == 2.5


def test_step_worked_example():
    state = KalmanState(estimate=0.0, covariance=1.0,
                        process_var=1.0, meas_var=0.5)
    est, new = kalman_step(1.0, state)
    # p_pred = 2, gain = 0.8
    assert est == pytest.approx(0.8, rel=1e-15)
    assert new.covariance == pytest.approx(0.4, rel=1e-12)


def test_covariance_fixed_point():
    state = KalmanState(estimate=0.0, covariance=1.0)
    for _ in range(50):
        _, state = kalman_step(0.0, state)
    assert abs(state.covariance - P_SS) < 1e-9
    p_pred = state.covariance + state.process_var
    gain = p_pred / (p_pred + state.meas_var)
    assert abs(gain - K_SS) < 1e-9


@pytest.mark.parametrize("p0,increasing", [(1.0, False), (0.05, True)])
def test_covariance_monotone_to_fixed_point(p0, increasing):
    state = KalmanState(estimate=0.0, covariance=p0)
    prev = p0
    for _ in range(60):
        _, state = kalman_step(0.0, state)
        if increasing:
            assert state.covariance > prev or state.covariance == pytest.approx(P_SS, abs=1e-12)
        else:
            assert state.covariance < prev or state.covariance == pytest.approx(P_SS, abs=1e-12)
        prev = state.covariance


def test_covariance_sequence_ignores_measurements():
    a = KalmanState(estimate=0.0, covariance=1.0)
    b = KalmanState(estimate=100.0, covariance=1.0)
    rng = np.random.default_rng(5)
    for z in rng.normal(size=40):
        _, a = kalman_step(z, a)
        _, b = kalman_step(-3.0 * z + 7.0, b)
        assert a.covariance == b.covariance


def test_state_validation():
    with pytest.raises(InvalidParameterError):
        KalmanState(estimate=0.0, covariance=0.0)
    with pytest.raises(InvalidParameterError):
        KalmanState(estimate=0.0, covariance=1.0, meas_var=0.0)
    with pytest.raises(InvalidParameterError):
        KalmanState(estimate=0.0, covariance=1.0, process_var=-0.1)


def test_run_kalman_trivial_series():
    out = run_kalman(MeasurementSeries.from_values([4.2], 1.0))
    np.testing.assert_array_equal(out, [4.2])
    const = run_kalman(MeasurementSeries.from_values([1.5] * 20, 1.0))
    np.testing.assert_array_equal(const, [1.5] * 20)
    empty = run_kalman(MeasurementSeries.from_values([], 1.0))
    assert empty.shape == (0,)


def test_run_kalman_ramp_golden():
    out = run_kalman(MeasurementSeries.from_values(range(11), 1.0))
    np.testing.assert_allclose(out, RAMP_GOLDEN, rtol=1e-12)


def test_run_kalman_matches_reference_on_noisy_series():
    rng = np.random.default_rng(11)
    values = np.cumsum(rng.normal(size=60))
    out = run_kalman(MeasurementSeries.from_values(values, 1.0))
    np.testing.assert_allclose(out, oracle.kalman_reference(values), rtol=1e-12)


@given(st.floats(min_value=-100.0, max_value=100.0),
       st.floats(min_value=-100.0, max_value=100.0),
       st.floats(min_value=0.01, max_value=50.0),
       st.floats(min_value=0.0, max_value=10.0),
       st.floats(min_value=0.01, max_value=10.0))
def test_update_is_convex_combination(est, z, p, q, r):
    state = KalmanState(estimate=est, covariance=p, process_var=q, meas_var=r)
    new_est, new_state = kalman_step(z, state)
    gain = (p + q) / (p + q + r)
    assert 0.0 < gain < 1.0
    assert min(est, z) - 1e-12 <= new_est <= max(est, z) + 1e-12
    assert new_state.covariance > 0.0
