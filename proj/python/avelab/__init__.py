"""Python bindings for the avelab C++ library.

Matrices and vectors are accepted as anything numpy can convert to float64.
Structured results are returned as dicts with the same layout as the
``ave-lab`` command line tool's ``results`` field.
"""

from ._avelab import (
    DimensionCapExceeded,
    DimensionMismatch,
    Error,
    InvalidInput,
    InvariantBreach,
    NumericFailure,
    Tolerances,
    aligning_spectrum,
    ave_to_lcp,
    circle_trace,
    coincidence_report,
    degree,
    degree_profile,
    is_degenerate,
    p_matrix_check,
    properness_breakpoints,
    q_check,
    quotient_functional,
    rho_R,
    rho_a,
    run_suite,
    simplicity,
    solve,
    suite_names,
    winding_number,
)

TRACE_HEADER = ("theta", "x1", "x2", "fx1", "fx2")

__all__ = [name for name in dir() if not name.startswith("_")]
