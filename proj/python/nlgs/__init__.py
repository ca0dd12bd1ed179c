"""Quadrature solver for the 1-D nonlocal Gray-Scott system.

The heavy lifting happens in the compiled extension; this package re-exports
its surface.
"""

from nlgs._core import (
    BoundaryConstraint,
    ConfigError,
    DiscreteOperator,
    DivergenceError,
    GrayScottParams,
    Grid,
    Kernel,
    NeumannExtension,
    NumericalError,
    ProfileMetrics,
    SystemState,
    WeightSet,
    assemble,
    compute_weights,
    lp_error,
    observed_order,
    preset_json,
    preset_names,
    profile_metrics,
    pulse_initial_conditions,
    quasilinear_det,
    rhs,
    run_experiment_json,
    simulate_json,
    symbol,
    tent,
)

__all__ = [
    "BoundaryConstraint",
    "ConfigError",
    "DiscreteOperator",
    "DivergenceError",
    "GrayScottParams",
    "Grid",
    "Kernel",
    "NeumannExtension",
    "NumericalError",
    "ProfileMetrics",
    "SystemState",
    "WeightSet",
    "assemble",
    "compute_weights",
    "lp_error",
    "observed_order",
    "preset_json",
    "preset_names",
    "profile_metrics",
    "pulse_initial_conditions",
    "quasilinear_det",
    "rhs",
    "run_experiment_json",
    "simulate_json",
    "symbol",
    "tent",
]
