"""Partition geometry, label algebra, and membership values."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fuzzytrack import (CENTER_UNITS, LABELS, InvalidParameterError, fuzzify,
                        get_partition, half_width, negate_label)
from fuzzytrack.membership import FuzzySet, Partition


def test_half_width_golden():
    assert half_width(1.0) == pytest.approx(2.3548200450309493, rel=1e-12)
    assert half_width(0.5) == pytest.approx(1.1774100225154747, rel=1e-12)


def test_half_width_linear_in_sigma():
    assert half_width(2.0) == 2.0 * half_width(1.0)


@pytest.mark.parametrize("sigma", [0.0, -1.0])
def test_half_width_rejects_nonpositive(sigma):
    with pytest.raises(InvalidParameterError):
        half_width(sigma)


def test_thirteen_distinct_labels():
    assert len(LABELS) == 13
    assert len(set(LABELS)) == 13


def test_negation_is_an_involution_closed_on_labels():
    for label in LABELS:
        flipped = negate_label(label)
        assert flipped in LABELS
        assert negate_label(flipped) == label
    assert negate_label("ze") == "ze"
    assert negate_label("pvvb") == "nvvb"
    assert negate_label("ns") == "ps"


def test_negate_rejects_unknown_label():
    with pytest.raises(InvalidParameterError):
        negate_label("huge")


def test_partition_centers_and_symmetry():
    part = get_partition(1.0)
    a = part.scale
    assert len(part.sets) == 13
    centers = [s.center for s in part.sets]
    assert centers == [u * a for u in CENTER_UNITS]
    # sign-symmetric set of centers
    assert sorted(centers) == sorted(-c for c in centers)


def test_partition_supports():
    part = get_partition(1.0)
    a = part.scale
    for s in part.sets:
        width = s.support_hi - s.support_lo
        expected = a if s.label in ("pvvb", "nvvb") else 2.0 * a
        assert width == pytest.approx(expected, rel=1e-12)
        assert s.center == pytest.approx(0.5 * (s.support_lo + s.support_hi),
                                         abs=1e-12)
    lo, hi = part.universe
    assert lo == -6.0 * a and hi == 6.0 * a


def test_fuzzy_set_rejects_bad_geometry():
    with pytest.raises(InvalidParameterError):
        FuzzySet("ze", center=1.0, support_lo=-1.0, support_hi=1.0, sigma=1.0)
    with pytest.raises(InvalidParameterError):
        FuzzySet("ze", center=0.0, support_lo=-1.0, support_hi=1.0, sigma=0.0)


def test_membership_peak_and_half_height():
    part = get_partition(1.0)
    a = part.scale
    ze = part["ze"]
    assert ze.membership(0.0) == 1.0
    assert ze.membership(a / 2) == pytest.approx(0.5, abs=1e-13)
    assert ze.membership(-a / 2) == pytest.approx(0.5, abs=1e-13)
    assert ze.membership(a) == pytest.approx(0.0625, rel=1e-13)
    assert ze.membership(-a) == pytest.approx(0.0625, rel=1e-13)


def test_adjacent_interior_sets_cross_at_half():
    # interior sets are spaced exactly one scale apart
    part = get_partition(1.0)
    interior = sorted((s for s in part.sets if s.label not in ("pvvb", "nvvb")),
                      key=lambda s: s.center)
    for lower, upper in zip(interior, interior[1:]):
        mid = 0.5 * (lower.center + upper.center)
        assert lower.membership(mid) == pytest.approx(0.5, abs=1e-12)
        assert upper.membership(mid) == pytest.approx(0.5, abs=1e-12)


def test_fuzzify_at_zero():
    part = get_partition(1.0)
    vec = fuzzify(0.0, part)
    assert list(vec) == list(LABELS)
    assert vec["ze"] == 1.0
    assert vec["pvs"] == pytest.approx(0.0625, rel=1e-12)
    assert vec["nvs"] == pytest.approx(0.0625, rel=1e-12)
    assert vec["ps"] == pytest.approx(2.0 ** -16, rel=1e-12)
    assert vec["ns"] == pytest.approx(2.0 ** -16, rel=1e-12)
    for label in ("pm", "pb", "pvb", "pvvb", "nm", "nb", "nvb", "nvvb"):
        assert vec[label] < 2.0 ** -16


def test_fuzzify_at_set_centers():
    part = get_partition(1.0)
    a = part.scale
    at_end = fuzzify(5.5 * a, part)
    assert at_end["pvvb"] == 1.0
    at_one = fuzzify(a, part)
    assert at_one["pvs"] == 1.0
    assert at_one["ze"] == pytest.approx(0.0625, rel=1e-12)
    assert at_one["ps"] == pytest.approx(0.0625, rel=1e-12)


@given(st.floats(min_value=-15.0, max_value=15.0),
       st.floats(min_value=0.25, max_value=4.0))
def test_memberships_bounded_and_unimodal(y, sigma):
    part = get_partition(sigma)
    values = part.memberships(y)
    assert np.all(values > 0.0)
    assert np.all(values <= 1.0)
    # at most one set can peak at any crisp input
    assert int(np.sum(values == 1.0)) <= 1


@given(st.sampled_from(LABELS), st.floats(min_value=0.0, max_value=6.0),
       st.floats(min_value=0.01, max_value=5.9))
def test_membership_decreases_away_from_center(label, offset, extra):
    fs = get_partition(1.0)[label]
    nearer = fs.membership(fs.center + offset)
    farther = fs.membership(fs.center + offset + extra)
    assert farther < nearer


def test_partition_getitem_unknown():
    with pytest.raises(KeyError):
        get_partition(1.0)["pxl"]


def test_partition_build_matches_cache():
    assert Partition.build(1.5) == get_partition(1.5)
