"""Twin-parameter Bernstein operators: bracket calculus, the corrected
operator and its moment identities, and uniform-convergence experiments."""

from .analysis import (
    ConvergenceReport,
    Grid,
    ParamSequence,
    ToleranceError,
    constant_sequence,
    curve_samples,
    half_harmonic_sequence,
    korovkin_experiment,
    log_rule_sequence,
    param_sequence,
    second_moment_bound,
    sup_error,
    trend_experiment,
)
from .operators import (
    BUILTIN_FUNCTIONS,
    BasisVector,
    NodeVector,
    OperatorSpec,
    TargetFunction,
    apply_operator,
    apply_operator_original,
    basis,
    builtin_function,
    moment_closed_form,
    nodes,
    operator_curve,
    second_moment_identity_check,
)
from .pqcalc import (
    MAX_DEGREE,
    PQParams,
    pq_binomial,
    pq_binomial_oracle,
    pq_factorial,
    pq_integer,
    q_binomial_row,
    q_bracket,
)
from .reporting import read_report_csv, read_report_json, write_report

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_FUNCTIONS",
    "BasisVector",
    "ConvergenceReport",
    "Grid",
    "MAX_DEGREE",
    "NodeVector",
    "OperatorSpec",
    "PQParams",
    "ParamSequence",
    "TargetFunction",
    "ToleranceError",
    "apply_operator",
    "apply_operator_original",
    "basis",
    "builtin_function",
    "constant_sequence",
    "curve_samples",
    "half_harmonic_sequence",
    "korovkin_experiment",
    "log_rule_sequence",
    "moment_closed_form",
    "nodes",
    "operator_curve",
    "param_sequence",
    "pq_binomial",
    "pq_binomial_oracle",
    "pq_factorial",
    "pq_integer",
    "q_binomial_row",
    "q_bracket",
    "read_report_csv",
    "read_report_json",
    "second_moment_bound",
    "second_moment_identity_check",
    "sup_error",
    "trend_experiment",
    "write_report",
]
