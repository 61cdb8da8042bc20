"""Maxwell-Stefan and higher-order Maxwell-Stefan diffusion in 1D."""

from ._core import (
    ComparisonError,
    Config,
    ConfigError,
    Error,
    Model,
    RunReport,
    SingularSystemError,
    StabilityError,
    cfl_number,
    compare_runs,
    run,
    solve_dense,
    solve_deviator,
    sweep_gamma,
)

__all__ = [
    "ComparisonError",
    "Config",
    "ConfigError",
    "Error",
    "Model",
    "RunReport",
    "SingularSystemError",
    "StabilityError",
    "cfl_number",
    "compare_runs",
    "run",
    "solve_dense",
    "solve_deviator",
    "sweep_gamma",
]
