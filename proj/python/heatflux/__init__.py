"""Stationary and time-resolved radiative heat transfer between two small
particles, computed from a single-oscillator Drude-Lorentz dipole model.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    ConfigError,
    DegenerateFit,
    DerivedMaterial,
    DomainError,
    DrudeLorentzParams,
    ExtremaSet,
    ExtremumPoint,
    FarFieldApprox,
    FitParams,
    FluxChannel,
    FluxDecomposition,
    NotConverged,
    OracleReport,
    PairConfig,
    Particle,
    StationaryResult,
    ThermalScales,
    TimeSeries,
    TooCoarse,
    TransientEvaluator,
    __version__,
    derived_material,
    far_field_approx,
    find_extrema,
    fit_max_params,
    flux_at,
    flux_average_model,
    flux_max_model,
    flux_series,
    format_reports,
    near_field_approx,
    preset_names,
    preset_pair,
    run_all_oracles,
    stationary_flux,
    thermal_scales,
)

__all__ = [
    "ConfigError",
    "DegenerateFit",
    "DerivedMaterial",
    "DomainError",
    "DrudeLorentzParams",
    "ExtremaSet",
    "ExtremumPoint",
    "FarFieldApprox",
    "FitParams",
    "FluxChannel",
    "FluxDecomposition",
    "NotConverged",
    "OracleReport",
    "PairConfig",
    "Particle",
    "StationaryResult",
    "ThermalScales",
    "TimeSeries",
    "TooCoarse",
    "TransientEvaluator",
    "__version__",
    "derived_material",
    "far_field_approx",
    "find_extrema",
    "fit_max_params",
    "flux_at",
    "flux_average_model",
    "flux_max_model",
    "flux_series",
    "format_reports",
    "near_field_approx",
    "preset_names",
    "preset_pair",
    "run_all_oracles",
    "stationary_flux",
    "thermal_scales",
]
