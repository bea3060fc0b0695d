"""Sine-series collocation solver for second-order two-point boundary value problems."""

from ._core import (
    BoundaryConditions,
    CutoffSpec,
    InvalidInputError,
    NonConvergenceError,
    OddTrigPoly,
    OdeGrid,
    OutOfDomainError,
    SolveReport,
    build_grid,
    cutoff_eval,
    eval_expression,
    interpolate_odd,
    parse_print,
    solve_linear,
    solve_linear_callable,
    solve_named,
    solve_nonlinear,
)

__all__ = [
    "BoundaryConditions",
    "CutoffSpec",
    "InvalidInputError",
    "NonConvergenceError",
    "OddTrigPoly",
    "OdeGrid",
    "OutOfDomainError",
    "SolveReport",
    "build_grid",
    "cutoff_eval",
    "eval_expression",
    "interpolate_odd",
    "parse_print",
    "solve_linear",
    "solve_linear_callable",
    "solve_named",
    "solve_nonlinear",
]

__version__ = "0.1.0"
