"""Spectral collocation solvers for nonlinear boundary-value problems on [0, inf)."""

from ._core import (
    ConfigurationError,
    DomainError,
    Error,
    OracleError,
    SolveError,
    UsageError,
    csv,
    delta_matrix,
    hermite_nodes,
    laguerre_nodes,
    mglf_eval,
    preset_names,
    shoot,
    solve,
    transformed_hermite_eval,
    verify,
)

__all__ = [
    "ConfigurationError",
    "DomainError",
    "Error",
    "OracleError",
    "SolveError",
    "UsageError",
    "csv",
    "delta_matrix",
    "hermite_nodes",
    "laguerre_nodes",
    "mglf_eval",
    "preset_names",
    "shoot",
    "solve",
    "transformed_hermite_eval",
    "verify",
]
