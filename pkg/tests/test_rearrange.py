"""Rearrangement profiles: exactness, equimeasurability, closed-form
integrals, and the dyadic oscillation inequality."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridnorms import (
    DomainError,
    SampledFunction1D,
    SampledFunction2D,
    StepProfile,
    distribution_function,
    double_star,
    evaluate_star,
    oscillation_inequality_check,
    power_weight_integral,
    profile_from_csv,
    profile_to_csv,
    rearrange,
    star_values,
)

from helpers import brute_rearrange_pairs, brute_star, random_profile_arrays

finite_vals = st.lists(
    st.floats(-100.0, 100.0, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=40,
)


def test_sorted_values_example():
    f = SampledFunction1D(0.0, 0.5, np.array([3.0, 1.0, 2.0]))
    prof = rearrange(f)
    assert prof.pieces == [(3.0, 0.5), (2.0, 0.5), (1.0, 0.5)]
    assert evaluate_star(prof, 0.6) == 2.0


def test_indicator_rearranges_to_itself():
    f = SampledFunction1D(-4.0, 0.25, np.ones(12))
    prof = rearrange(f)
    assert prof.pieces == [(1.0, 3.0)]
    assert evaluate_star(prof, 1.5) == 1.0
    assert evaluate_star(prof, 6.0) == 0.0


def test_zero_function_has_no_pieces():
    prof = rearrange(SampledFunction2D(0, 0, 1.0, np.zeros((3, 3))))
    assert prof.npieces == 0
    assert prof.total_measure == 0.0 and prof.total_mass == 0.0
    assert evaluate_star(prof, 1.0) == 0.0
    assert double_star(prof, 1.0) == 0.0
    assert power_weight_integral(prof, 1.0) == 0.0


@given(vals=finite_vals, spacing=st.floats(0.01, 2.0))
@settings(deadline=None)
def test_equimeasurability(vals, spacing):
    f = SampledFunction1D(0.0, spacing, np.array(vals))
    dist = distribution_function(f)
    a = np.abs(f.values)
    for y in [0.0, 0.5, 1.0] + sorted(a.tolist()):
        assert dist(y) == np.count_nonzero(a > y) * spacing
    prof = rearrange(f)
    assert prof.total_measure == pytest.approx(np.count_nonzero(a) * spacing, rel=1e-12)
    assert prof.total_mass == pytest.approx(np.sum(a) * spacing, rel=1e-12)


@given(vals=finite_vals, spacing=st.floats(0.01, 2.0))
@settings(deadline=None)
def test_rearrange_matches_brute_pairs(vals, spacing):
    f = SampledFunction1D(-1.0, spacing, np.array(vals))
    prof = rearrange(f)
    brute = brute_rearrange_pairs(f.values, spacing)
    assert len(prof.pieces) == len(brute)
    for (v, m), (bv, bm) in zip(prof.pieces, brute):
        assert v == bv and m == pytest.approx(bm, rel=1e-14)


@given(vals=finite_vals)
@settings(deadline=None)
def test_rearrange_is_permutation_invariant(vals):
    a = np.array(vals)
    f = rearrange(SampledFunction1D(0, 1.0, a))
    g = rearrange(SampledFunction1D(5.0, 1.0, a[::-1]))
    assert np.array_equal(f.values, g.values)
    assert np.array_equal(f.measures, g.measures)


def test_star_is_right_continuous_and_monotone(rng):
    for _ in range(50):
        vals, meas = random_profile_arrays(rng)
        prof = StepProfile(vals, meas)
        bounds = np.cumsum(meas)
        # at an interior bound the next piece's value rules
        for i in range(len(vals) - 1):
            assert evaluate_star(prof, float(bounds[i])) == vals[i + 1]
        assert evaluate_star(prof, float(bounds[-1])) == 0.0
        ts = np.sort(rng.uniform(1e-6, bounds[-1] * 1.3, 60))
        vs = star_values(prof, ts)
        assert np.all(np.diff(vs) <= 0)
        for t, v in zip(ts, vs):
            assert v == evaluate_star(prof, float(t))
            assert v == brute_star(prof.pieces, float(t))


def test_distribution_function_edges():
    f = SampledFunction1D(0, 0.5, np.array([2.0, -1.0, 0.0]))
    dist = distribution_function(f)
    assert dist(0.0) == 1.0  # two nonzero cells
    assert dist(1.0) == 0.5
    assert dist(2.0) == 0.0
    assert dist(5.0) == 0.0
    with pytest.raises(DomainError):
        dist(-0.1)


def test_double_star_examples():
    ind = StepProfile(np.array([1.0]), np.array([2.0]))
    assert double_star(ind, 1.0) == 1.0
    assert double_star(ind, 2.0) == 1.0
    assert double_star(ind, 4.0) == 0.5
    prof = StepProfile.from_pieces([(3.0, 0.5), (2.0, 0.5), (1.0, 0.5)])
    assert double_star(prof, 1.0) == pytest.approx(2.5, rel=1e-15)
    # averaged dominates pointwise
    for t in [0.2, 0.5, 0.9, 1.3, 2.0]:
        assert double_star(prof, t) >= evaluate_star(prof, t)
    with pytest.raises(DomainError):
        double_star(prof, 0.0)


def test_power_weight_integral():
    prof = StepProfile.from_pieces([(2.0, 1.0), (1.0, 1.0)])
    # exponent 1: plain integral of the profile
    assert power_weight_integral(prof, 1.0) == pytest.approx(3.0, rel=1e-15)
    assert power_weight_integral(prof, 1.0, upper=0.5) == pytest.approx(1.0, rel=1e-15)
    assert power_weight_integral(prof, 1.0, upper=1.5) == pytest.approx(2.5, rel=1e-15)
    # exponent 1/2: 2*2*(1-0) + 1*2*(sqrt(2)-1)
    want = 4.0 + 2.0 * (math.sqrt(2.0) - 1.0)
    assert power_weight_integral(prof, 0.5) == pytest.approx(want, rel=1e-14)
    with pytest.raises(DomainError):
        power_weight_integral(prof, 0.0)
    with pytest.raises(DomainError):
        power_weight_integral(prof, 1.0, upper=0.0)


def test_step_profile_validation():
    with pytest.raises(DomainError):
        StepProfile(np.array([1.0, 2.0]), np.array([1.0, 1.0]))  # increasing
    with pytest.raises(DomainError):
        StepProfile(np.array([1.0, 1.0]), np.array([1.0, 1.0]))  # tie
    with pytest.raises(DomainError):
        StepProfile(np.array([1.0, 0.0]), np.array([1.0, 1.0]))  # zero value
    with pytest.raises(DomainError):
        StepProfile(np.array([1.0]), np.array([0.0]))  # zero measure
    with pytest.raises(DomainError):
        StepProfile(np.array([1.0]), np.array([1.0, 2.0]))  # shape mismatch
    with pytest.raises(DomainError):
        StepProfile(np.array([np.inf]), np.array([1.0]))


def test_oscillation_example_closed_form():
    prof = StepProfile.from_pieces([(2.0, 1.0), (1.0, 1.0)])
    rec = oscillation_inequality_check(prof, 0.5, 1.5)
    assert rec.lhs == 1.0
    assert rec.rhs_core == pytest.approx(math.log(2.0) + math.log(1.5), rel=1e-14)
    assert rec.explicit_constant == pytest.approx(1.0 / math.log(2.0))
    assert rec.passed
    assert rec.rhs_core / math.log(2.0) >= rec.lhs


def test_oscillation_constant_profile_trivial():
    prof = StepProfile(np.array([4.0]), np.array([3.0]))
    rec = oscillation_inequality_check(prof, 1.0, 2.0)
    assert rec.lhs == 0.0 and rec.passed


def test_oscillation_infinite_t():
    prof = StepProfile.from_pieces([(2.0, 1.0), (1.0, 1.0)])
    rec = oscillation_inequality_check(prof, 0.5, math.inf)
    assert rec.lhs == 2.0
    assert rec.passed


def test_oscillation_argument_errors():
    prof = StepProfile(np.array([1.0]), np.array([1.0]))
    with pytest.raises(DomainError):
        oscillation_inequality_check(prof, 0.0, 1.0)
    with pytest.raises(DomainError):
        oscillation_inequality_check(prof, 1.0, 1.0)
    with pytest.raises(DomainError):
        evaluate_star(prof, -1.0)


def test_oscillation_randomized(rng):
    # the acceptance run does 1000; keep the unit test light
    for _ in range(200):
        vals, meas = random_profile_arrays(rng)
        prof = StepProfile(vals, meas)
        total = float(np.sum(meas))
        s = float(rng.uniform(1e-4, total))
        t = s + float(rng.uniform(1e-4, total))
        rec = oscillation_inequality_check(prof, s, t)
        assert rec.passed, (s, t, rec.lhs, rec.rhs_core)


def test_profile_csv_roundtrip(tmp_path, rng):
    vals, meas = random_profile_arrays(rng)
    prof = StepProfile(vals, meas)
    text = profile_to_csv(prof)
    back = profile_from_csv(text)
    assert np.array_equal(back.values, prof.values)
    assert np.array_equal(back.measures, prof.measures)
    path = tmp_path / "prof.csv"
    profile_to_csv(prof, path)
    back2 = profile_from_csv(path)
    assert np.array_equal(back2.values, prof.values)
    assert text.splitlines()[0] == "value,measure"
