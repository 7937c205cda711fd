"""Lorentz norms, discrete Lip seminorms, moduli of continuity."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridnorms import (
    DomainError,
    LorentzParams,
    SampledFunction1D,
    SampledFunction2D,
    StepProfile,
    evaluate_star,
    lip_seminorm,
    lip_shift_scan,
    lorentz_norm,
    modulus_1d,
    modulus_2d,
    modulus_sweep_1d,
    modulus_sweep_2d,
    rearrange,
    sup_norm,
)

from helpers import (
    brute_lip,
    brute_lp,
    brute_modulus_1d,
    brute_modulus_2d,
    random_grid_1d,
    random_grid_2d,
)


def test_lorentz_params_validation():
    LorentzParams(1.0, 1.0)
    with pytest.raises(DomainError):
        LorentzParams(0.5, 1.0)
    with pytest.raises(DomainError):
        LorentzParams(2.0, 0.0)
    with pytest.raises(DomainError):
        LorentzParams(math.inf, 2.0)


@pytest.mark.parametrize("p,q", [(1.0, 1.0), (2.0, 1.0), (2.0, 2.0), (3.0, 1.5), (4.0, 7.0)])
def test_indicator_lorentz_closed_form(p, q):
    L = 2.75
    prof = StepProfile(np.array([1.0]), np.array([L]))
    want = L ** (1.0 / p) * (p / q) ** (1.0 / q)
    assert lorentz_norm(prof, LorentzParams(p, q)) == pytest.approx(want, rel=1e-14)


def test_lorentz_p1_hand_integral():
    # 2*2*(1-0) + 1*2*(sqrt(2)-1), q = 1 so the norm is the integral itself
    prof = StepProfile.from_pieces([(2.0, 1.0), (1.0, 1.0)])
    want = 4.0 + 2.0 * (math.sqrt(2.0) - 1.0)
    assert lorentz_norm(prof, LorentzParams(2.0, 1.0)) == pytest.approx(want, rel=1e-14)


def test_lorentz_pp_is_lp(rng):
    for _ in range(40):
        f = random_grid_1d(rng) if rng.random() < 0.5 else random_grid_2d(rng, max_n=12)
        if not np.any(f.values):
            continue
        for p in (1.0, 2.0, 4.0, 2.7):
            got = lorentz_norm(rearrange(f), LorentzParams(p, p))
            assert got == pytest.approx(brute_lp(f, p), rel=1e-10)


def test_lorentz_zero_profile():
    prof = rearrange(SampledFunction1D(0, 1, np.zeros(4)))
    assert lorentz_norm(prof, LorentzParams(2.0, 1.0)) == 0.0


@given(
    scale_pow=st.integers(-8, 8),
    q=st.sampled_from([1.0, 2.0, 3.0]),
    p=st.sampled_from([1.0, 2.0, 4.0]),
)
@settings(deadline=None, max_examples=40)
def test_lorentz_homogeneity(scale_pow, q, p):
    lam = 2.0**scale_pow
    prof = StepProfile.from_pieces([(3.0, 0.5), (1.5, 1.25), (0.25, 2.0)])
    scaled = StepProfile(prof.values * lam, prof.measures)
    a = lorentz_norm(scaled, LorentzParams(p, q))
    b = lam * lorentz_norm(prof, LorentzParams(p, q))
    assert a == pytest.approx(b, rel=1e-13)


def test_lorentz_smaller_q_is_stronger(rng):
    # the q = 1 norm dominates the q = p norm
    for _ in range(20):
        k = int(rng.integers(1, 8))
        vals = np.sort(rng.uniform(0.1, 4.0, k))[::-1] + np.linspace(k * 1e-3, 0, k)
        prof = StepProfile(vals, rng.uniform(0.1, 1.0, k))
        p = float(rng.uniform(1.0, 4.0))
        n1 = lorentz_norm(prof, LorentzParams(p, 1.0))
        n2 = lorentz_norm(prof, LorentzParams(p, p))
        assert n1 >= n2 * (1.0 - 1e-12)


def test_lip_zero_function():
    rep = lip_seminorm(SampledFunction1D(0, 0.5, np.zeros(6)), 0.5)
    assert rep.seminorm == 0.0 and rep.sup_norm == 0.0 and rep.lip_norm == 0.0


def test_lip_single_cell():
    # jump of 1 over the smallest shift wins: seminorm 1/spacing at h = spacing
    d = 0.4
    rep = lip_seminorm(SampledFunction1D(0, d, np.array([1.0])), 1.0)
    assert rep.seminorm == pytest.approx(1.0 / d, rel=1e-15)
    assert rep.witness_shift == d
    assert rep.sup_norm == 1.0
    assert rep.lip_norm == pytest.approx(1.0 + 1.0 / d, rel=1e-15)


@pytest.mark.parametrize("d", [0.1, 0.02, 0.004])
def test_lip_hat_slope(d):
    n = round(2.0 / d)
    centers = -1.0 + (np.arange(n) + 0.5) * d
    hat = np.maximum(0.0, 1.0 - np.abs(centers))
    rep = lip_seminorm(SampledFunction1D(-1.0, d, hat), 1.0)
    assert abs(rep.seminorm - 1.0) <= 2.0 * d


def test_lip_matches_brute(rng):
    for _ in range(40):
        f = random_grid_1d(rng, max_n=24)
        alpha = float(rng.uniform(0.1, 1.0))
        want_sem, want_wit = brute_lip(f, alpha)
        rep = lip_seminorm(f, alpha)
        assert rep.seminorm == pytest.approx(want_sem, rel=1e-12, abs=1e-15)
        if want_sem > 0:
            assert rep.witness_shift == pytest.approx(want_wit, rel=1e-12)


def test_lip_alpha_validation():
    f = SampledFunction1D(0, 1, np.ones(2))
    for alpha in (0.0, -0.5, 1.5):
        with pytest.raises(DomainError):
            lip_seminorm(f, alpha)


def test_lip_shift_scan_structure(rng):
    f = random_grid_1d(rng, max_n=16, allow_zero_rows=False)
    alpha = 0.5
    hs, vs = lip_shift_scan(f, alpha)
    assert np.all(np.diff(hs) > 0)
    rep = lip_seminorm(f, alpha)
    on_grid = np.isclose(hs / f.spacing, np.round(hs / f.spacing))
    assert np.max(vs[on_grid]) == pytest.approx(rep.seminorm, rel=1e-12)
    # midpoint rows stay finite lower bounds, never above the neighbor max
    assert np.all(vs >= 0)


def test_modulus_1d_zero_shift():
    f = SampledFunction1D(0, 0.3, np.array([1.0, -2.0]))
    assert modulus_1d(f, 0.0) == 0.0
    assert modulus_1d(f, 0.29) == 0.0
    with pytest.raises(DomainError):
        modulus_1d(f, -0.1)


def test_modulus_1d_matches_brute(rng):
    for _ in range(30):
        f = random_grid_1d(rng, max_n=20)
        for t in [f.spacing * k for k in (1, 2, 3, 7)] + [0.5 * f.spacing * 5]:
            assert modulus_1d(f, t) == pytest.approx(brute_modulus_1d(f, t), abs=1e-15)


def test_modulus_1d_monotone_subadditive(rng):
    for _ in range(30):
        f = random_grid_1d(rng, max_n=20)
        n = len(f)
        ts = f.spacing * np.arange(0, n + 3)
        vals = modulus_sweep_1d(f, ts)
        assert np.all(np.diff(vals) >= 0)
        for k in range(0, n + 3):
            t = float(ts[k])
            assert modulus_1d(f, 2 * t) <= 2 * modulus_1d(f, t) + 1e-12


def test_modulus_bounded_by_seminorm(rng):
    for _ in range(20):
        f = random_grid_1d(rng, max_n=20)
        alpha = float(rng.uniform(0.2, 1.0))
        sem = lip_seminorm(f, alpha).seminorm
        for k in (1, 2, 5, len(f) + 1):
            t = k * f.spacing
            assert modulus_1d(f, t) <= sem * t**alpha + 1e-12


def test_two_term_sup_bound(rng):
    for _ in range(50):
        f = random_grid_1d(rng)
        prof = rearrange(f)
        n = len(f)
        ts = f.spacing * np.arange(1, n + 1)
        om = modulus_sweep_1d(f, ts)
        for t, w in zip(ts, om):
            assert sup_norm(f) <= evaluate_star(prof, float(t)) + 2.0 * w + 1e-12


def test_sweep_1d_matches_pointwise(rng):
    f = random_grid_1d(rng, max_n=24)
    ts = np.sort(rng.uniform(0, (len(f) + 2) * f.spacing, 40))
    sweep = modulus_sweep_1d(f, ts)
    for t, v in zip(ts, sweep):
        assert v == modulus_1d(f, float(t))
    with pytest.raises(DomainError):
        modulus_sweep_1d(f, np.array([-1.0]))


def test_modulus_2d_zero_delta():
    f = SampledFunction2D(0, 0, 0.5, np.array([[1.0, 2.0], [3.0, 4.0]]))
    assert modulus_2d(f, 0.0) == 0.0
    with pytest.raises(DomainError):
        modulus_2d(f, -1.0)


def test_modulus_2d_matches_brute(rng):
    for _ in range(12):
        f = random_grid_2d(rng, max_n=7)
        for k in (1, 2, 4):
            delta = k * f.spacing
            assert modulus_2d(f, delta) == pytest.approx(
                brute_modulus_2d(f, delta), abs=1e-15
            )


def test_modulus_2d_monotone_and_separable(rng):
    g = random_grid_1d(rng, max_n=10, allow_zero_rows=False)
    # h = indicator along y: every row equals g
    f = SampledFunction2D(g.origin, 0.0, g.spacing, np.tile(g.values, (4, 1)))
    deltas = g.spacing * np.arange(0, len(g) + 2)
    vals = modulus_sweep_2d(f, deltas)
    assert np.all(np.diff(vals) >= 0)
    for d in deltas[1:]:
        assert modulus_2d(f, float(d)) >= modulus_1d(g, float(d)) - 1e-15


def test_sweep_2d_matches_pointwise(rng):
    f = random_grid_2d(rng, max_n=8)
    deltas = np.sort(rng.uniform(0, 10 * f.spacing, 25))
    sweep = modulus_sweep_2d(f, deltas)
    for d, v in zip(deltas, sweep):
        assert v == modulus_2d(f, float(d))
