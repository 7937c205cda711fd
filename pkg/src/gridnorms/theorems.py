"""Headline inequality checks: oscillation of the rearrangement against
section seminorms, the sup-norm and modulus bounds, and the mixed-norm
scale embedding.

Where the underlying estimate carries an unnamed constant the check
records the observed lhs / rhs_core ratio and verdicts are left to
refinement-stability studies; the one explicit constant here (2^7 * q in
the embedding intermediate) is asserted hard.
"""

from __future__ import annotations

import math

import numpy as np

from .grid import DomainError, GridFunction, SampledFunction1D, SampledFunction2D, sup_norm
from .mixed import section_profiles, section_star_integral, u_p_norm
from .norms import LorentzParams, lorentz_norm, modulus_2d
from .rearrange import evaluate_star, rearrange
from .report import RefinementTrace, VerdictRecord, ratio_of

__all__ = [
    "refine",
    "check_oscillation_main",
    "check_sup_bound",
    "check_modulus_bound",
    "check_up_embedding",
    "check_up_embedding_intermediate",
    "refinement_trace",
]


def refine(f: GridFunction) -> GridFunction:
    """Halve the spacing by subdividing every cell; the represented
    function is unchanged exactly."""
    if isinstance(f, SampledFunction1D):
        return SampledFunction1D(f.origin, f.spacing / 2.0, np.repeat(f.values, 2))
    v = np.repeat(np.repeat(f.values, 2, axis=0), 2, axis=1)
    return SampledFunction2D(f.origin_x, f.origin_y, f.spacing / 2.0, v)


def _ratio_record(inequality_id, lhs, rhs_core, spacing, params) -> VerdictRecord:
    ratio, degenerate = ratio_of(lhs, rhs_core)
    if degenerate:
        params = dict(params, degenerate=True)
    return VerdictRecord(
        inequality_id=inequality_id,
        lhs=lhs,
        rhs_core=rhs_core,
        empirical_ratio=ratio,
        grid_spacing=spacing,
        params=params,
    )


def check_oscillation_main(f: SampledFunction2D, p: float, t: float) -> VerdictRecord:
    """Rearrangement oscillation against section seminorms at the split
    scale sqrt(t)/2:

        f*(t) - f*(2t) <= c * t^{1/(2p)} [phi1*(sqrt(t)/2) + phi2*(sqrt(t)/2)]

    The constant is unnamed, so the record carries the observed ratio.
    If both seminorm profiles vanish at sqrt(t)/2 the support of f fits
    in a box of measure t/4, forcing f*(t) = 0; the 0/0 case is genuine
    degeneracy, never a diverging ratio.
    """
    if not t > 0:
        raise DomainError(f"need t > 0, got {t}")
    if not p >= 1:
        raise DomainError(f"need p >= 1, got {p}")
    star = rearrange(f)
    lhs = evaluate_star(star, t) - evaluate_star(star, 2.0 * t)
    prof = section_profiles(f, 1.0 / p)
    s = math.sqrt(t) / 2.0
    rhs_core = t ** (1.0 / (2.0 * p)) * (
        evaluate_star(rearrange(prof.phi1), s) + evaluate_star(rearrange(prof.phi2), s)
    )
    return _ratio_record("oscillation_main", lhs, rhs_core, f.spacing, {"p": p, "t": t})


def check_sup_bound(f: SampledFunction2D, p: float) -> VerdictRecord:
    """Sup norm against the Lorentz (p,1) norms of the section seminorm
    profiles; unnamed constant, ratio recorded."""
    if not p >= 1:
        raise DomainError(f"need p >= 1, got {p}")
    prof = section_profiles(f, 1.0 / p)
    params = LorentzParams(p, 1.0)
    rhs_core = lorentz_norm(rearrange(prof.phi1), params) + lorentz_norm(
        rearrange(prof.phi2), params
    )
    return _ratio_record("sup_bound", sup_norm(f), rhs_core, f.spacing, {"p": p})


def check_modulus_bound(f: SampledFunction2D, p: float, delta: float) -> VerdictRecord:
    """Modulus of continuity against the weighted tail integral of the
    section seminorm profiles; unnamed constant, ratio recorded."""
    if not delta > 0:
        raise DomainError(f"need delta > 0, got {delta}")
    lhs = modulus_2d(f, delta)
    rhs_core = section_star_integral(f, p, delta)
    return _ratio_record("modulus_bound", lhs, rhs_core, f.spacing, {"p": p, "delta": delta})


def _check_pq(p: float, q: float) -> None:
    if not (1 <= p < q and math.isfinite(q)):
        raise DomainError(f"need 1 <= p < q < inf, got p={p}, q={q}")


def check_up_embedding(f: SampledFunction2D, p: float, q: float) -> VerdictRecord:
    """Mixed-norm scale monotonicity: u_q norm against u_p norm, ratio
    recorded (unnamed constant).  The full reports ride in params."""
    _check_pq(p, q)
    rep_q = u_p_norm(f, q)
    rep_p = u_p_norm(f, p)
    params = {
        "p": p,
        "q": q,
        "u_q": rep_q.u_p_norm,
        "u_p": rep_p.u_p_norm,
        "phi_q_sum": rep_q.phi1_lorentz + rep_q.phi2_lorentz,
        "phi_p_sum": rep_p.phi1_lorentz + rep_p.phi2_lorentz,
    }
    return _ratio_record("up_embedding", rep_q.u_p_norm, rep_p.u_p_norm, f.spacing, params)


def check_up_embedding_intermediate(
    f: SampledFunction2D, p: float, q: float, tol: float = 1e-10
) -> VerdictRecord:
    """The explicit-constant step inside the scale embedding:

        ||phi_{q,1}||_{q,1} + ||phi_{q,2}||_{q,1}
            <= 2^7 q (||phi_{p,1}||_{p,1} + ||phi_{p,2}||_{p,1})

    where phi_{r,i} are the Lip-(1/r) seminorm profiles.  Hard pass/fail.
    """
    _check_pq(p, q)
    rep_q = u_p_norm(f, q)
    rep_p = u_p_norm(f, p)
    lhs = rep_q.phi1_lorentz + rep_q.phi2_lorentz
    rhs_core = rep_p.phi1_lorentz + rep_p.phi2_lorentz
    constant = 2.0**7 * q
    passed = lhs <= constant * rhs_core + tol * max(1.0, lhs)
    return VerdictRecord(
        inequality_id="up_embedding_intermediate",
        lhs=lhs,
        rhs_core=rhs_core,
        explicit_constant=constant,
        passed=bool(passed),
        grid_spacing=f.spacing,
        params={"p": p, "q": q, "tol": tol},
    )


def refinement_trace(functions, check) -> RefinementTrace:
    """Apply one check across representations of the same function at
    strictly decreasing spacings (subdivisions or finer resamplings)."""
    records = [check(g) for g in functions]
    return RefinementTrace(records)
