"""Finite-difference-free Sobolev checks on a catalog of smooth
functions with analytic derivatives.

Rough grid functions have no meaningful discrete second derivative, so
this module only accepts catalog entries: closures for f and its pure
first and second partials, plus a numerically estimated third-derivative
scale that prices the discretization error of hard-constant checks.  L^1
norms are midpoint cell sums of the analytic evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grid import DomainError, SampledFunction2D
from .mixed import section_profiles, u_p_norm
from .report import VerdictRecord, ratio_of

__all__ = [
    "SobolevData",
    "SmoothTestFunction",
    "make_gaussian",
    "make_product_bump",
    "make_poly_gauss",
    "catalog",
    "default_catalog",
    "sample_to_grid",
    "sobolev_data",
    "check_section_lip_bound",
    "check_gagliardo_nirenberg",
    "check_w122_into_u1",
]


@dataclass(frozen=True)
class SobolevData:
    l1_norm: float
    d11: float
    d22: float
    d1: float
    d2: float


@dataclass(frozen=True)
class SmoothTestFunction:
    symbolic_id: str
    parameters: dict
    f: Callable
    d1: Callable
    d2: Callable
    d11: Callable
    d22: Callable
    deriv3_scale: float
    suggested_window: float
    # half-width of an exactly compact support; None for decay-only tails
    support_radius: float | None = None


def _third_derivative_scale(d11, d22, span: float) -> float:
    """Crude sup bound for |d111| and |d222| by central differences of the
    analytic second derivatives on a scan grid; only the magnitude
    matters (it scales a tolerance budget)."""
    xs = np.linspace(-span, span, 321)
    step = xs[1] - xs[0]
    x, y = np.meshgrid(xs, xs, indexing="ij")
    a = d11(x, y)
    b = d22(x, y)
    g1 = np.abs((a[2:, :] - a[:-2, :]) / (2.0 * step)).max()
    g2 = np.abs((b[:, 2:] - b[:, :-2]) / (2.0 * step)).max()
    return float(max(g1, g2))


def make_gaussian(sx: float = 1.0, sy: float = 1.0, amplitude: float = 1.0) -> SmoothTestFunction:
    if sx <= 0 or sy <= 0:
        raise DomainError("gaussian widths must be positive")
    ax, ay = 1.0 / (sx * sx), 1.0 / (sy * sy)

    def f(x, y):
        return amplitude * np.exp(-(ax * x * x + ay * y * y))

    def d1(x, y):
        return -2.0 * ax * x * f(x, y)

    def d2(x, y):
        return -2.0 * ay * y * f(x, y)

    def d11(x, y):
        return (4.0 * ax * ax * x * x - 2.0 * ax) * f(x, y)

    def d22(x, y):
        return (4.0 * ay * ay * y * y - 2.0 * ay) * f(x, y)

    span = 4.0 * max(sx, sy)
    return SmoothTestFunction(
        symbolic_id="gaussian",
        parameters={"sx": sx, "sy": sy, "amplitude": amplitude},
        f=f,
        d1=d1,
        d2=d2,
        d11=d11,
        d22=d22,
        deriv3_scale=_third_derivative_scale(d11, d22, span),
        suggested_window=5.5 * max(sx, sy),
    )


def _cos4_factor(a: float):
    # cos^4(pi t / 2a) on |t| < a: three continuous derivatives vanish at
    # the support edge, so central-difference cross-checks stay O(step^2)
    k = math.pi / (2.0 * a)

    def f0(t):
        t = np.asarray(t, dtype=np.float64)
        return np.where(np.abs(t) < a, np.cos(k * t) ** 4, 0.0)

    def f1(t):
        t = np.asarray(t, dtype=np.float64)
        c, s = np.cos(k * t), np.sin(k * t)
        return np.where(np.abs(t) < a, -4.0 * k * c**3 * s, 0.0)

    def f2(t):
        t = np.asarray(t, dtype=np.float64)
        c, s = np.cos(k * t), np.sin(k * t)
        return np.where(np.abs(t) < a, 4.0 * k * k * c * c * (3.0 * s * s - c * c), 0.0)

    return f0, f1, f2


def make_product_bump(a: float = 1.5, b: float = 1.5, amplitude: float = 1.0) -> SmoothTestFunction:
    if a <= 0 or b <= 0:
        raise DomainError("bump half-widths must be positive")
    fx0, fx1, fx2 = _cos4_factor(a)
    fy0, fy1, fy2 = _cos4_factor(b)

    def f(x, y):
        return amplitude * fx0(x) * fy0(y)

    def d1(x, y):
        return amplitude * fx1(x) * fy0(y)

    def d2(x, y):
        return amplitude * fx0(x) * fy1(y)

    def d11(x, y):
        return amplitude * fx2(x) * fy0(y)

    def d22(x, y):
        return amplitude * fx0(x) * fy2(y)

    return SmoothTestFunction(
        symbolic_id="product_bump",
        parameters={"a": a, "b": b, "amplitude": amplitude},
        f=f,
        d1=d1,
        d2=d2,
        d11=d11,
        d22=d22,
        deriv3_scale=_third_derivative_scale(d11, d22, max(a, b)),
        suggested_window=max(a, b),
        support_radius=max(a, b),
    )


def make_poly_gauss(scale: float = 1.0, amplitude: float = 1.0) -> SmoothTestFunction:
    if scale <= 0:
        raise DomainError("scale must be positive")
    s = scale

    def _e(x, y):
        return np.exp(-((x / s) ** 2 + (y / s) ** 2))

    def f(x, y):
        return amplitude * (x / s) * _e(x, y)

    def d1(x, y):
        u = x / s
        return (amplitude / s) * (1.0 - 2.0 * u * u) * _e(x, y)

    def d2(x, y):
        u, v = x / s, y / s
        return (amplitude / s) * (-2.0 * u * v) * _e(x, y)

    def d11(x, y):
        u = x / s
        return (amplitude / (s * s)) * (4.0 * u**3 - 6.0 * u) * _e(x, y)

    def d22(x, y):
        u, v = x / s, y / s
        return (amplitude / (s * s)) * u * (4.0 * v * v - 2.0) * _e(x, y)

    return SmoothTestFunction(
        symbolic_id="poly_gauss",
        parameters={"scale": scale, "amplitude": amplitude},
        f=f,
        d1=d1,
        d2=d2,
        d11=d11,
        d22=d22,
        deriv3_scale=_third_derivative_scale(d11, d22, 4.0 * s),
        suggested_window=5.5 * s,
    )


def catalog() -> dict[str, Callable[..., SmoothTestFunction]]:
    return {
        "gaussian": make_gaussian,
        "product_bump": make_product_bump,
        "poly_gauss": make_poly_gauss,
    }


def default_catalog() -> list[SmoothTestFunction]:
    return [make_gaussian(), make_product_bump(), make_poly_gauss()]


def sample_to_grid(g: SmoothTestFunction, window: float, spacing: float) -> SampledFunction2D:
    """Sample g at cell centers of a square grid on [-window, window)^2."""
    if window <= 0 or spacing <= 0:
        raise DomainError("window and spacing must be positive")
    n = round(2.0 * window / spacing)
    if n < 2 or abs(n * spacing - 2.0 * window) > 1e-9 * max(1.0, window):
        raise DomainError(f"spacing {spacing} does not tile the window [-{window}, {window})")
    centers = -window + (np.arange(n) + 0.5) * spacing
    x, y = np.meshgrid(centers, centers, indexing="xy")
    return SampledFunction2D(-window, -window, spacing, g.f(x, y))


def _cell_l1(values: np.ndarray, spacing: float) -> float:
    return float(np.sum(np.abs(values)) * spacing * spacing)


def sobolev_data(g: SmoothTestFunction, window: float, spacing: float) -> SobolevData:
    """Midpoint-rule L^1 norms of f and its four pure partials.

    Raises when the window visibly truncates the integrands: the mass on
    the boundary cell ring, scaled by 10 for the geometric tail beyond
    it, must stay below 1e-9 of the total.  Exactly supported entries
    skip the heuristic when the window contains the support.
    """
    n = round(2.0 * window / spacing)
    if n < 2 or abs(n * spacing - 2.0 * window) > 1e-9 * max(1.0, window):
        raise DomainError(f"spacing {spacing} does not tile the window [-{window}, {window})")
    centers = -window + (np.arange(n) + 0.5) * spacing
    x, y = np.meshgrid(centers, centers, indexing="xy")
    fields = [g.f(x, y), g.d11(x, y), g.d22(x, y), g.d1(x, y), g.d2(x, y)]
    norms = [_cell_l1(v, spacing) for v in fields]
    covered = g.support_radius is not None and window >= g.support_radius - 1e-12
    if not covered:
        ring = np.zeros_like(fields[0], dtype=bool)
        ring[0, :] = ring[-1, :] = ring[:, 0] = ring[:, -1] = True
        ring_mass = sum(_cell_l1(v[ring], spacing) for v in fields)
        if 10.0 * ring_mass > 1e-9 * sum(norms):
            raise DomainError(
                f"window {window} too small: boundary-ring mass {ring_mass:.3e} "
                f"is not negligible against the norms"
            )
    return SobolevData(l1_norm=norms[0], d11=norms[1], d22=norms[2], d1=norms[3], d2=norms[4])


def check_section_lip_bound(
    g: SmoothTestFunction, window: float, spacing: float
) -> VerdictRecord:
    """Cell sum of section Lip-1 seminorms against half the L^1 norm of
    the matching pure second derivative:

        integral ||f_x||*_{Lip 1} dx <= (1/2) ||D22 f||_1   (and mirrored)

    Hard pass with a discretization budget of 5 * spacing * (third
    derivative scale); the budget shrinks linearly under refinement.
    """
    data = sobolev_data(g, window, spacing)
    sampled = sample_to_grid(g, window, spacing)
    prof = section_profiles(sampled, 1.0)
    lhs1 = float(np.sum(prof.phi1.values)) * spacing
    lhs2 = float(np.sum(prof.phi2.values)) * spacing
    rhs1, rhs2 = data.d11, data.d22
    budget = 5.0 * spacing * g.deriv3_scale
    ok1 = lhs1 <= 0.5 * rhs1 + budget
    ok2 = lhs2 <= 0.5 * rhs2 + budget
    axis = 1 if lhs1 - 0.5 * rhs1 >= lhs2 - 0.5 * rhs2 else 2
    lhs, rhs = (lhs1, rhs1) if axis == 1 else (lhs2, rhs2)
    return VerdictRecord(
        inequality_id="section_lip_bound",
        lhs=lhs,
        rhs_core=rhs,
        explicit_constant=0.5,
        passed=bool(ok1 and ok2),
        grid_spacing=spacing,
        params={
            "function": g.symbolic_id,
            "window": window,
            "axis": axis,
            "lhs_rows": lhs1,
            "rhs_rows": rhs1,
            "lhs_cols": lhs2,
            "rhs_cols": rhs2,
            "budget": budget,
        },
    )


def check_gagliardo_nirenberg(
    g: SmoothTestFunction, window: float, spacing: float
) -> VerdictRecord:
    """First-derivative norm against the geometric mean of function and
    second-derivative norms, per axis; unnamed constant, worse-axis ratio
    recorded."""
    data = sobolev_data(g, window, spacing)
    r1, deg1 = ratio_of(data.d1, math.sqrt(data.l1_norm * data.d11))
    r2, deg2 = ratio_of(data.d2, math.sqrt(data.l1_norm * data.d22))
    axis = 1 if r1 >= r2 else 2
    lhs = data.d1 if axis == 1 else data.d2
    rhs = math.sqrt(data.l1_norm * (data.d11 if axis == 1 else data.d22))
    ratio = max(r1, r2)
    params = {
        "function": g.symbolic_id,
        "window": window,
        "axis": axis,
        "ratio_axis1": r1,
        "ratio_axis2": r2,
    }
    if deg1 and deg2:
        params["degenerate"] = True
    return VerdictRecord(
        inequality_id="gagliardo_nirenberg",
        lhs=lhs,
        rhs_core=rhs,
        empirical_ratio=ratio,
        grid_spacing=spacing,
        params=params,
    )


def check_w122_into_u1(g: SmoothTestFunction, window: float, spacing: float) -> VerdictRecord:
    """Mixed U_1 norm of the sampled function against
    ||f||_1^{1/2} (||D11 f||_1^{1/2} + ||D22 f||_1^{1/2}); unnamed
    constant, ratio recorded."""
    data = sobolev_data(g, window, spacing)
    sampled = sample_to_grid(g, window, spacing)
    rep = u_p_norm(sampled, 1.0)
    rhs_core = math.sqrt(data.l1_norm) * (math.sqrt(data.d11) + math.sqrt(data.d22))
    ratio, degenerate = ratio_of(rep.u_p_norm, rhs_core)
    params = {"function": g.symbolic_id, "window": window, "u1_report": rep.__dict__}
    if degenerate:
        params["degenerate"] = True
    return VerdictRecord(
        inequality_id="w122_into_u1",
        lhs=rep.u_p_norm,
        rhs_core=rhs_core,
        empirical_ratio=ratio,
        grid_spacing=spacing,
        params=params,
    )
