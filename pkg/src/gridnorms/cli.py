"""Command line front end.

Subcommands: rearrange (grid -> profile CSV), norm (single-number
queries), verify (inequality suites as JSON lines, nonzero exit iff an
explicit-constant check fails), embed (smooth-catalog Sobolev checks),
counterexample (unbounded function with bounded mixed norm).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .counterexample import (
    CounterexampleSpec,
    calibrate_majorant,
    divergence_probe,
    majorant_norm_integral,
    mixed_norm_finiteness,
    psi_profile,
    sample_grid,
)
from .grid import DomainError, SampledFunction2D, read_grid, write_grid
from .mixed import u_p_norm
from .norms import LorentzParams, lip_seminorm, lorentz_norm, modulus_1d, modulus_2d
from .rearrange import oscillation_inequality_check, profile_to_csv, rearrange
from .report import RefinementTrace
from .smoothing import residual_decay_check, steklov_lip_bound_check
from .sobolev import (
    catalog,
    check_gagliardo_nirenberg,
    check_section_lip_bound,
    check_w122_into_u1,
    sobolev_data,
)
from .theorems import (
    check_modulus_bound,
    check_oscillation_main,
    check_sup_bound,
    check_up_embedding,
    check_up_embedding_intermediate,
    refine,
)

__all__ = ["main"]


def _emit(obj) -> None:
    print(json.dumps(obj))


def _parse_pq(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"expected p,q (two comma-separated reals), got {text!r}")
    return float(parts[0]), float(parts[1])


def cmd_rearrange(args) -> int:
    prof = rearrange(read_grid(args.grid))
    text = profile_to_csv(prof, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def cmd_norm(args) -> int:
    f = read_grid(args.grid)
    if args.lorentz is not None:
        p, q = _parse_pq(args.lorentz)
        value = lorentz_norm(rearrange(f), LorentzParams(p, q))
        _emit({"norm": "lorentz", "p": p, "q": q, "value": value})
    elif args.lip is not None:
        if isinstance(f, SampledFunction2D):
            raise DomainError("--lip needs a 1D grid; use --up for 2D mixed norms")
        rep = lip_seminorm(f, args.lip)
        _emit(
            {
                "norm": "lip",
                "alpha": rep.alpha,
                "sup_norm": rep.sup_norm,
                "seminorm": rep.seminorm,
                "lip_norm": rep.lip_norm,
                "witness_shift": rep.witness_shift,
            }
        )
    elif args.modulus is not None:
        if isinstance(f, SampledFunction2D):
            value = modulus_2d(f, args.modulus)
        else:
            value = modulus_1d(f, args.modulus)
        _emit({"norm": "modulus", "t": args.modulus, "value": value})
    else:
        if not isinstance(f, SampledFunction2D):
            raise DomainError("--up needs a 2D grid")
        rep = u_p_norm(f, args.up)
        _emit(
            {
                "norm": "up",
                "p": rep.p,
                "value": rep.u_p_norm,
                "n1_lorentz": rep.n1_lorentz,
                "n2_lorentz": rep.n2_lorentz,
                "phi1_lorentz": rep.phi1_lorentz,
                "phi2_lorentz": rep.phi2_lorentz,
            }
        )
    return 0


def _snap(length: float, spacing: float) -> float:
    return max(1, round(length / spacing)) * spacing


def _suite_records(f: SampledFunction2D, p: float, q: float | None, suite: str, canonical: bool):
    """One pass of a verify suite.  `canonical` restricts parameterized
    checks to their single physically-scaled instance so refinement
    levels stay comparable."""
    w = f.nrows * f.ncols * f.spacing**2
    side = min(f.nrows, f.ncols) * f.spacing
    out = []
    if suite in ("main", "all"):
        prof = rearrange(f)
        if prof.npieces:
            out.append(oscillation_inequality_check(prof, w / 8.0, w / 2.0))
        ts = [w / 4.0] if canonical else [w / 16.0, w / 4.0, w / 2.0]
        for t in ts:
            out.append(check_oscillation_main(f, p, t))
        out.append(check_sup_bound(f, p))
        deltas = [side / 4.0] if canonical else [f.spacing, _snap(side / 4.0, f.spacing)]
        for d in dict.fromkeys(deltas):
            out.append(check_modulus_bound(f, p, d))
    if suite in ("embedding", "all"):
        if q is None:
            raise DomainError("the embedding suite needs --q")
        out.append(check_up_embedding(f, p, q))
        out.append(check_up_embedding_intermediate(f, p, q))
    if suite in ("smoothing", "all"):
        if canonical:
            hs = [_snap(side / 4.0, f.spacing)]
        else:
            kmax = max(f.nrows, f.ncols)
            hs = [f.spacing * 2**j for j in range(0, kmax.bit_length()) if 2**j <= kmax]
        for h in hs:
            out.append(steklov_lip_bound_check(f, p, h))
            out.append(residual_decay_check(f, p, h))
    return out


def cmd_verify(args) -> int:
    f = read_grid(args.grid)
    if not isinstance(f, SampledFunction2D):
        raise DomainError("verify needs a 2D grid")
    records = _suite_records(f, args.p, args.q, args.suite, canonical=False)
    for r in records:
        print(r.to_json())
    if args.refine:
        levels = [f]
        for _ in range(args.refine):
            levels.append(refine(levels[-1]))
        per_level = [
            _suite_records(g, args.p, args.q, args.suite, canonical=True) for g in levels
        ]
        for rs in per_level[1:]:
            records.extend(rs)
            for r in rs:
                print(r.to_json())
        by_id: dict[str, list] = {}
        for rs in per_level:
            for r in rs:
                by_id.setdefault(r.inequality_id, []).append(r)
        for rs in by_id.values():
            # profile-level checks carry no spacing and cannot be traced
            if len(rs) >= 2 and all(not math.isnan(r.grid_spacing) for r in rs):
                _emit({"refinement_trace": RefinementTrace(rs).to_dict()})
    failed = any(r.explicit_constant is not None and not r.passed for r in records)
    return 1 if failed else 0


def cmd_embed(args) -> int:
    builders = catalog()
    if args.function not in builders:
        raise DomainError(f"unknown function {args.function!r}; have {sorted(builders)}")
    if args.function == "gaussian":
        g = builders[args.function](sx=args.sigma, sy=args.sigma)
    elif args.function == "product_bump":
        g = builders[args.function](a=args.sigma, b=args.sigma)
    else:
        g = builders[args.function](scale=args.sigma)
    window = args.window if args.window is not None else g.suggested_window
    data = sobolev_data(g, window, args.spacing)
    _emit(
        {
            "sobolev_data": {
                "l1_norm": data.l1_norm,
                "d1": data.d1,
                "d2": data.d2,
                "d11": data.d11,
                "d22": data.d22,
            },
            "function": g.symbolic_id,
            "parameters": g.parameters,
            "window": window,
            "spacing": args.spacing,
        }
    )
    records = [
        check_section_lip_bound(g, window, args.spacing),
        check_gagliardo_nirenberg(g, window, args.spacing),
        check_w122_into_u1(g, window, args.spacing),
    ]
    for r in records:
        print(r.to_json())
    failed = any(r.explicit_constant is not None and not r.passed for r in records)
    return 1 if failed else 0


def cmd_counterexample(args) -> int:
    spec = CounterexampleSpec(args.p, args.q, args.beta)
    radii = [0.4 * 10.0**-j for j in range(6)]
    _emit({"divergence_table": [[r, v] for r, v in divergence_probe(spec, radii)]})
    holdout = np.geomspace(3e-6, 0.9, 97)
    estimates = [psi_profile(spec, float(x)) for x in holdout]
    _emit(
        {
            "majorant": {
                "constant": calibrate_majorant(spec),
                "max_holdout_ratio": max(e.ratio for e in estimates),
                "sweep_points": len(estimates),
            }
        }
    )
    window = majorant_norm_integral(spec.q, spec.beta)
    _emit(
        {
            "majorant_integral": {
                "finite": window.finite,
                "value": None if math.isinf(window.value) else window.value,
                "exponent": window.exponent,
            }
        }
    )
    if args.levels < 2:
        raise DomainError("need --levels >= 2 for a refinement trace")
    spacings = [2.0 ** -(6 + j) for j in range(args.levels)]
    trace = mixed_norm_finiteness(spec, spacings)
    _emit({"refinement_trace": trace.to_dict()})
    if args.emit_grid is not None:
        emit_spacing = max(min(spacings), 2.0**-11)
        write_grid(sample_grid(spec, emit_spacing), args.emit_grid)
        _emit({"emitted_grid": args.emit_grid, "spacing": emit_spacing})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridnorms",
        description="rearrangement, Lorentz and mixed Lipschitz-section norms on grids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("rearrange", help="grid file to rearrangement profile CSV")
    pr.add_argument("--grid", required=True)
    pr.add_argument("--out", default=None, help="CSV path (default: stdout)")
    pr.set_defaults(fn=cmd_rearrange)

    pn = sub.add_parser("norm", help="norms of a grid file")
    pn.add_argument("--grid", required=True)
    group = pn.add_mutually_exclusive_group(required=True)
    group.add_argument("--lorentz", metavar="P,Q", help="Lorentz norm indices")
    group.add_argument("--lip", type=float, metavar="ALPHA", help="Lip norm (1D grids)")
    group.add_argument("--modulus", type=float, metavar="T", help="modulus of continuity")
    group.add_argument("--up", type=float, metavar="P", help="mixed section norm (2D grids)")
    pn.set_defaults(fn=cmd_norm)

    pv = sub.add_parser("verify", help="inequality suites on a grid file")
    pv.add_argument("--grid", required=True)
    pv.add_argument("--p", type=float, required=True)
    pv.add_argument("--q", type=float, default=None)
    pv.add_argument(
        "--suite", choices=("main", "embedding", "smoothing", "all"), default="all"
    )
    pv.add_argument(
        "--refine", type=int, default=0, metavar="K", help="rerun at K halved spacings"
    )
    pv.set_defaults(fn=cmd_verify)

    pe = sub.add_parser("embed", help="Sobolev embedding checks on a smooth function")
    pe.add_argument("--function", default="gaussian")
    pe.add_argument("--sigma", type=float, default=1.0, help="scale parameter")
    pe.add_argument("--spacing", type=float, default=0.01)
    pe.add_argument("--window", type=float, default=None, help="half-width (default: catalog)")
    pe.set_defaults(fn=cmd_embed)

    pc = sub.add_parser("counterexample", help="unbounded function, bounded mixed norm")
    pc.add_argument("--p", type=float, default=2.0)
    pc.add_argument("--q", type=float, default=2.0)
    pc.add_argument("--beta", type=float, default=0.25)
    pc.add_argument("--levels", type=int, default=7, metavar="K")
    pc.add_argument("--emit-grid", default=None, metavar="FILE")
    pc.set_defaults(fn=cmd_counterexample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
