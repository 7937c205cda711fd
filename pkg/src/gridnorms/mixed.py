"""Section-norm profiles and the mixed U_p norm.

For a 2D grid function the y-sections are the rows (functions of x) and
the x-sections are the columns (functions of y).  Taking the Lip-alpha
seminorm and the sup norm of every section yields four 1D profiles, each
itself a grid function on the free axis; the U_p norm is the sum over
the two axes of the Lorentz (p,1) norm of the rearranged full Lip
profile (seminorm + sup).

All reductions are numpy max/sum operations (pairwise summation), so
results are deterministic and independent of any parallel split.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .grid import DomainError, SampledFunction1D, SampledFunction2D
from .norms import LorentzParams, _check_alpha, lorentz_norm
from .rearrange import power_weight_integral, rearrange

__all__ = [
    "SectionProfiles",
    "MixedNormReport",
    "section_profiles",
    "u_p_norm",
    "section_star_integral",
]


@dataclass(frozen=True)
class SectionProfiles:
    """phi1(y), psi1(y): Lip-alpha seminorm and sup norm of the y-sections;
    phi2(x), psi2(x): the same for the x-sections."""

    phi1: SampledFunction1D
    phi2: SampledFunction1D
    psi1: SampledFunction1D
    psi2: SampledFunction1D
    alpha: float

    @property
    def n1(self) -> SampledFunction1D:
        """Full Lip-alpha norm profile of the y-sections: phi1 + psi1."""
        return self.phi1 + self.psi1

    @property
    def n2(self) -> SampledFunction1D:
        return self.phi2 + self.psi2


def _axis_profiles(a: np.ndarray, spacing: float, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    # one difference table covers every row of the axis at once
    table = backend.rows_shift_diff_table(np.ascontiguousarray(a))
    ks = np.arange(1, table.shape[1], dtype=np.float64)
    scaled = table[:, 1:] / (ks * spacing) ** alpha
    return scaled.max(axis=1), np.abs(a).max(axis=1)


def section_profiles(f: SampledFunction2D, alpha: float) -> SectionProfiles:
    """Seminorm and sup profiles of all sections of f, as grid functions
    on the respective free axes."""
    alpha = _check_alpha(alpha)
    sem1, sup1 = _axis_profiles(f.values, f.spacing, alpha)
    sem2, sup2 = _axis_profiles(f.values.T, f.spacing, alpha)
    return SectionProfiles(
        phi1=SampledFunction1D(f.origin_y, f.spacing, sem1),
        phi2=SampledFunction1D(f.origin_x, f.spacing, sem2),
        psi1=SampledFunction1D(f.origin_y, f.spacing, sup1),
        psi2=SampledFunction1D(f.origin_x, f.spacing, sup2),
        alpha=alpha,
    )


@dataclass(frozen=True)
class MixedNormReport:
    p: float
    u_p_norm: float
    n1_lorentz: float
    n2_lorentz: float
    phi1_lorentz: float
    phi2_lorentz: float


def u_p_norm(f: SampledFunction2D, p: float) -> MixedNormReport:
    """Mixed norm: Lorentz (p,1) norms of the rearranged full Lip-(1/p)
    profiles of both axes, summed.  The seminorm-only Lorentz norms ride
    along because several inequality checks cite those instead."""
    if not p >= 1:
        raise DomainError(f"need p >= 1, got {p}")
    prof = section_profiles(f, 1.0 / p)
    params = LorentzParams(p, 1.0)
    n1 = lorentz_norm(rearrange(prof.n1), params)
    n2 = lorentz_norm(rearrange(prof.n2), params)
    return MixedNormReport(
        p=p,
        u_p_norm=n1 + n2,
        n1_lorentz=n1,
        n2_lorentz=n2,
        phi1_lorentz=lorentz_norm(rearrange(prof.phi1), params),
        phi2_lorentz=lorentz_norm(rearrange(prof.phi2), params),
    )


def section_star_integral(f: SampledFunction2D, p: float, upper: float) -> float:
    """Closed form of integral_0^upper [phi1*(t) + phi2*(t)] t^{1/p-1} dt
    for the Lip-(1/p) seminorm profiles of f."""
    if not p >= 1:
        raise DomainError(f"need p >= 1, got {p}")
    if not upper > 0:
        raise DomainError(f"need a positive upper limit, got {upper}")
    prof = section_profiles(f, 1.0 / p)
    return power_weight_integral(rearrange(prof.phi1), 1.0 / p, upper) + power_weight_integral(
        rearrange(prof.phi2), 1.0 / p, upper
    )
