"""Second-order Fuchsian equations with prescribed exponents and apparent
singularities, constructed and independently verified in exact arithmetic.

The construction solves a Vandermonde system for the w'-coefficient and a
confluent Vandermonde system for the w-coefficient; verification re-derives
every local quantity by Laurent expansion and runs the power-series
recursion at each apparent point.  For apparent-point counts other than
n - 2 the dimension module counts free parameters and builds the quadratic
momentum constraints of the overdetermined case.
"""

from .builder import (
    FuchsViolation,
    LocalConstants,
    build_g_system,
    build_h_system,
    construct,
    g_rhs,
    h_matrix,
    h_rhs,
    local_constants,
    solve_g,
)
from .dimension import (
    CaseReport,
    MomentaCheck,
    QuadraticConstraint,
    check_momenta,
    classify,
    exact_quadratic_roots,
    float_obstructions,
    pinned_columns,
    quadratic_constraints,
    solve_quadratic_float,
    solve_under,
)
from .frobenius import (
    LocalExpansion,
    VerificationReport,
    frobenius_obstruction,
    indicial_roots,
    local_expansion,
    series_residual,
    verify,
)
from .linalg import Matrix, RowCertificate, SolveOutcome, det, eliminate, rank
from .model import (
    INFINITY,
    ExponentPair,
    FuchsianEquation,
    FuchsianInstance,
    InvalidInstance,
    Violation,
    equation_from_json_obj,
    equation_to_json_obj,
    fuchs_defect,
    instance_from_json_obj,
    instance_to_json_obj,
    psi,
    validate,
)
from .polynomials import LaurentSeries, Polynomial, Z, laurent_expand
from .sampling import random_instance
from .scalars import GaussianRational, format_rational, parse_rational, rational_sqrt

__version__ = "0.1.0"

__all__ = [
    "CaseReport",
    "ExponentPair",
    "FuchsViolation",
    "FuchsianEquation",
    "FuchsianInstance",
    "GaussianRational",
    "INFINITY",
    "InvalidInstance",
    "LaurentSeries",
    "LocalConstants",
    "LocalExpansion",
    "Matrix",
    "MomentaCheck",
    "Polynomial",
    "QuadraticConstraint",
    "RowCertificate",
    "SolveOutcome",
    "VerificationReport",
    "Violation",
    "Z",
    "build_g_system",
    "build_h_system",
    "check_momenta",
    "classify",
    "construct",
    "det",
    "eliminate",
    "equation_from_json_obj",
    "equation_to_json_obj",
    "exact_quadratic_roots",
    "float_obstructions",
    "format_rational",
    "frobenius_obstruction",
    "fuchs_defect",
    "g_rhs",
    "h_matrix",
    "h_rhs",
    "indicial_roots",
    "instance_from_json_obj",
    "instance_to_json_obj",
    "laurent_expand",
    "local_constants",
    "local_expansion",
    "parse_rational",
    "pinned_columns",
    "psi",
    "quadratic_constraints",
    "random_instance",
    "rank",
    "rational_sqrt",
    "series_residual",
    "solve_g",
    "solve_quadratic_float",
    "solve_under",
    "validate",
    "verify",
]
