"""Minimum-cost output feedback selection for structured systems.

Indices are 1-based everywhere: states x1..xn, inputs u1..um, outputs y1..yp,
and feedback links are (input, output) pairs.
"""

from ._fbsel import (
    BudgetExceeded,
    DimensionError,
    FbselError,
    Instance,
    ParseError,
    PreconditionError,
    Report,
    check_sfm,
    condense,
    generate_line,
    load_system,
    parse_system,
    reduce_set_cover,
    run_cli,
    solve_dp,
    solve_exact,
    solve_greedy,
    solve_two_stage,
    to_dot,
)

__all__ = [
    "BudgetExceeded",
    "DimensionError",
    "FbselError",
    "Instance",
    "ParseError",
    "PreconditionError",
    "Report",
    "check_sfm",
    "condense",
    "generate_line",
    "load_system",
    "parse_system",
    "reduce_set_cover",
    "run_cli",
    "solve_dp",
    "solve_exact",
    "solve_greedy",
    "solve_two_stage",
    "to_dot",
]
