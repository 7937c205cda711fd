"""Lorentz norms on step profiles; Lipschitz seminorms and moduli of
continuity of grid functions.

The Lorentz integral is a finite sum of power-function antiderivatives
over profile pieces.  Shift norms use the backend difference tables:
entry k of a table is the sup of |f(. + k*spacing) - f| over the plane,
with the zero extension supplying boundary pairs, so every value here is
an exact property of the cell-constant extension restricted to grid
shifts.  Between grid multiples the shifted pattern mixes two offsets;
the reported seminorm uses exact multiples only (the discrete sup, a
lower bound for the continuum seminorm), while lip_shift_scan also
evaluates the interval midpoints for diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .grid import DomainError, SampledFunction1D, SampledFunction2D, sup_norm
from .rearrange import StepProfile

__all__ = [
    "LorentzParams",
    "LipReport",
    "lorentz_norm",
    "lip_seminorm",
    "lip_shift_scan",
    "modulus_1d",
    "modulus_sweep_1d",
    "modulus_2d",
    "modulus_sweep_2d",
]


@dataclass(frozen=True)
class LorentzParams:
    p: float
    q: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p >= 1):
            raise DomainError(f"need 1 <= p < inf, got p={self.p}")
        if not (math.isfinite(self.q) and self.q >= 1):
            raise DomainError(f"need 1 <= q < inf, got q={self.q}")


def lorentz_norm(profile: StepProfile, params: LorentzParams) -> float:
    """L^{p,q} norm of a step profile, in closed form.

    ( integral_0^inf (t^{1/p} f*(t))^q dt/t )^{1/q}: piece with value v on
    (a, b] contributes v^q (p/q) (b^{q/p} - a^{q/p}).  With q = p this is
    the plain L^p norm.
    """
    if profile.npieces == 0:
        return 0.0
    # summed directly: powering the values can underflow to 0 or collide
    # adjacent doubles, which a StepProfile intermediary would reject
    bounds = np.cumsum(profile.measures)
    lower = np.concatenate(([0.0], bounds[:-1]))
    e = params.q / params.p
    total = float(np.sum(profile.values**params.q * (bounds**e - lower**e))) / e
    return total ** (1.0 / params.q)


@dataclass(frozen=True)
class LipReport:
    """Discrete Lip-alpha data of a 1D grid function: shifts h = k*spacing,
    seminorm = max_k h^{-alpha} * sup|f(.+h) - f|, witness_shift = the
    maximizing h.  Lower bound of the continuum seminorm."""

    alpha: float
    sup_norm: float
    seminorm: float
    witness_shift: float

    @property
    def lip_norm(self) -> float:
        return self.sup_norm + self.seminorm


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0 < alpha <= 1):
        raise DomainError(f"need 0 < alpha <= 1, got {alpha}")
    return alpha


def lip_seminorm(phi: SampledFunction1D, alpha: float) -> LipReport:
    """Discrete Lip-alpha seminorm over shifts k*spacing, k = 1..n+1.

    Shifts past the support width pair the window against zero, so the
    shift norm equals the sup norm there and h^{-alpha} makes larger k
    strictly worse; k = n+1 is the last shift that can change the max.
    """
    alpha = _check_alpha(alpha)
    table = backend.shift_diff_table_1d(np.ascontiguousarray(phi.values))
    ks = np.arange(1, table.shape[0], dtype=np.float64)
    scaled = table[1:] / (ks * phi.spacing) ** alpha
    best = int(np.argmax(scaled))
    return LipReport(
        alpha=alpha,
        sup_norm=sup_norm(phi),
        seminorm=float(scaled[best]),
        witness_shift=float((best + 1) * phi.spacing),
    )


def lip_shift_scan(phi: SampledFunction1D, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagnostic scan of h^{-alpha} * sup|f(.+h) - f| at grid multiples
    and at the midpoints between them.

    For h strictly between k*spacing and (k+1)*spacing the shifted grid
    straddles two offsets, so the shift norm is max of the two table
    entries; the midpoint rows therefore bound the continuum sup from
    below inside each interval.  Returns (h values, scaled values) sorted
    by h.  The reported seminorm is the max over the multiples only.
    """
    alpha = _check_alpha(alpha)
    table = backend.shift_diff_table_1d(np.ascontiguousarray(phi.values))
    d = phi.spacing
    ks = np.arange(1, table.shape[0], dtype=np.float64)
    h_grid = ks * d
    v_grid = table[1:] / h_grid ** alpha
    h_mid = (ks[:-1] + 0.5) * d
    v_mid = np.maximum(table[1:-1], table[2:]) / h_mid ** alpha
    hs = np.concatenate((h_grid, h_mid))
    vs = np.concatenate((v_grid, v_mid))
    order = np.argsort(hs)
    return hs[order], vs[order]


def _shift_count(t: float, spacing: float, hard_cap: int) -> int:
    """Largest k with k*spacing <= t, snapped so that exact multiples
    survive rounding, clamped to the table size."""
    if t < 0:
        raise DomainError(f"need t >= 0, got {t}")
    k = int(math.floor(t / spacing + 1e-9))
    return min(k, hard_cap)


def modulus_1d(phi: SampledFunction1D, t: float) -> float:
    """Modulus of continuity over grid shifts: max_{0 <= k*spacing <= t}
    of sup|f(.+k*spacing) - f|, zero extension outside the window."""
    table = backend.shift_diff_table_1d(np.ascontiguousarray(phi.values))
    k = _shift_count(t, phi.spacing, table.shape[0] - 1)
    return float(np.max(table[: k + 1]))


def modulus_sweep_1d(phi: SampledFunction1D, ts: np.ndarray) -> np.ndarray:
    """modulus_1d at many thresholds from one difference table."""
    ts = np.asarray(ts, dtype=np.float64)
    if ts.size and ts.min() < 0:
        raise DomainError("need t >= 0")
    table = backend.shift_diff_table_1d(np.ascontiguousarray(phi.values))
    running = np.maximum.accumulate(table)
    ks = np.floor(ts / phi.spacing + 1e-9).astype(np.int64)
    ks = np.minimum(ks, table.shape[0] - 1)
    return running[ks]


def _table_2d(f: SampledFunction2D, kmax: int) -> tuple[np.ndarray, int]:
    # beyond max(nrows, ncols) shifts add no new cell pairs: the supports
    # are disjoint and every difference is a plain |value|
    cap = max(f.nrows, f.ncols)
    return backend.shift_diff_table_2d(np.ascontiguousarray(f.values), min(kmax, cap)), min(kmax, cap)


def modulus_2d(f: SampledFunction2D, delta: float) -> float:
    """Modulus over grid shift pairs: max over 0 <= kx, ky with both
    shifts <= delta of sup|f(x + kx*spacing, y + ky*spacing) - f(x, y)|."""
    if delta < 0:
        raise DomainError(f"need delta >= 0, got {delta}")
    k = int(math.floor(delta / f.spacing + 1e-9))
    table, k = _table_2d(f, k)
    return float(np.max(table[: k + 1, : k + 1]))


def modulus_sweep_2d(f: SampledFunction2D, deltas: np.ndarray) -> np.ndarray:
    """modulus_2d at many thresholds from one difference table.

    The running box maximum M[k] = max over the (k+1)x(k+1) corner of the
    table grows one ring at a time.
    """
    deltas = np.asarray(deltas, dtype=np.float64)
    if deltas.size and deltas.min() < 0:
        raise DomainError("need delta >= 0")
    kmax = int(math.floor(float(deltas.max(initial=0.0)) / f.spacing + 1e-9))
    table, cap = _table_2d(f, kmax)
    ring = np.empty(cap + 1)
    ring[0] = table[0, 0]
    for k in range(1, cap + 1):
        ring[k] = max(float(table[k, : k + 1].max()), float(table[: k + 1, k].max()))
    running = np.maximum.accumulate(ring)
    ks = np.floor(deltas / f.spacing + 1e-9).astype(np.int64)
    ks = np.minimum(ks, cap)
    return running[ks]
