"""Rearrangements, Lorentz norms, and Lipschitz section norms on grids,
with exact or refinement-traced verification of the inequalities that
connect them."""

from .backend import kernel_backend
from .counterexample import (
    CounterexampleSpec,
    MajorantEstimate,
    MajorantIntegral,
    axis_lip_profile,
    calibrate_majorant,
    divergence_probe,
    eval_f,
    majorant_norm_integral,
    mixed_norm_finiteness,
    mixed_norm_value,
    psi_closed_form,
    psi_profile,
    radius_exceeding,
    sample_grid,
)
from .grid import (
    DomainError,
    GridCellMeasure,
    GridFunction,
    SampledFunction1D,
    SampledFunction2D,
    cell_measure,
    read_grid,
    section_x,
    section_y,
    sup_norm,
    write_grid,
)
from .mixed import (
    MixedNormReport,
    SectionProfiles,
    section_profiles,
    section_star_integral,
    u_p_norm,
)
from .norms import (
    LipReport,
    LorentzParams,
    lip_seminorm,
    lip_shift_scan,
    lorentz_norm,
    modulus_1d,
    modulus_2d,
    modulus_sweep_1d,
    modulus_sweep_2d,
)
from .rearrange import (
    DistributionFunction,
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
from .report import RefinementTrace, VerdictRecord, ratio_of
from .smoothing import (
    SteklovAverage,
    residual,
    residual_decay_check,
    smoothing_rate_ratio,
    steklov,
    steklov_lip_bound_check,
    uniform_convergence_study,
)
from .sobolev import (
    SmoothTestFunction,
    SobolevData,
    catalog,
    check_gagliardo_nirenberg,
    check_section_lip_bound,
    check_w122_into_u1,
    default_catalog,
    sample_to_grid,
    sobolev_data,
)
from .theorems import (
    check_modulus_bound,
    check_oscillation_main,
    check_sup_bound,
    check_up_embedding,
    check_up_embedding_intermediate,
    refine,
    refinement_trace,
)

__version__ = "0.1.0"

__all__ = [
    "CounterexampleSpec",
    "DistributionFunction",
    "DomainError",
    "GridCellMeasure",
    "GridFunction",
    "LipReport",
    "LorentzParams",
    "MajorantEstimate",
    "MajorantIntegral",
    "MixedNormReport",
    "RefinementTrace",
    "SampledFunction1D",
    "SampledFunction2D",
    "SectionProfiles",
    "SmoothTestFunction",
    "SobolevData",
    "SteklovAverage",
    "StepProfile",
    "VerdictRecord",
    "axis_lip_profile",
    "calibrate_majorant",
    "catalog",
    "cell_measure",
    "check_gagliardo_nirenberg",
    "check_modulus_bound",
    "check_oscillation_main",
    "check_section_lip_bound",
    "check_sup_bound",
    "check_up_embedding",
    "check_up_embedding_intermediate",
    "check_w122_into_u1",
    "default_catalog",
    "distribution_function",
    "divergence_probe",
    "double_star",
    "eval_f",
    "evaluate_star",
    "kernel_backend",
    "lip_seminorm",
    "lip_shift_scan",
    "lorentz_norm",
    "majorant_norm_integral",
    "mixed_norm_finiteness",
    "mixed_norm_value",
    "modulus_1d",
    "modulus_2d",
    "modulus_sweep_1d",
    "modulus_sweep_2d",
    "oscillation_inequality_check",
    "power_weight_integral",
    "profile_from_csv",
    "profile_to_csv",
    "psi_closed_form",
    "psi_profile",
    "radius_exceeding",
    "ratio_of",
    "read_grid",
    "rearrange",
    "refine",
    "refinement_trace",
    "residual",
    "residual_decay_check",
    "sample_grid",
    "sample_to_grid",
    "section_profiles",
    "section_star_integral",
    "section_x",
    "section_y",
    "smoothing_rate_ratio",
    "sobolev_data",
    "star_values",
    "steklov",
    "steklov_lip_bound_check",
    "sup_norm",
    "u_p_norm",
    "uniform_convergence_study",
    "write_grid",
]
