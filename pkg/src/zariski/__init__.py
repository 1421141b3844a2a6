"""Exact decomposition of effective divisors on surfaces.

Given a symmetric intersection matrix and an effective divisor, the package
splits the divisor into a nef positive part and a negative part whose
support has negative definite intersection matrix, all over exact rational
arithmetic, and certifies the result before returning it.
"""

__version__ = "0.1.0"

from .divisor import (
    CurveConfiguration,
    Divisor,
    SupportSet,
    leq_divisor,
    restrict,
    support,
    validate_configuration,
)
from .engine import (
    NefWitness,
    ZariskiResult,
    case2_kernel_recursion,
    decompose_with_stats,
    find_nef_witness,
    fujita_oracle,
    is_nef,
    maximal_nef_subdivisor,
    nef_join,
    verify_decomposition,
    zariski_decompose,
)
from .errors import (
    CertificateFailure,
    DimensionMismatch,
    DuplicateName,
    EmptyConfiguration,
    EmptySupport,
    InputError,
    InputNotNef,
    InternalError,
    InternalInvariantViolated,
    JoinNotNef,
    MalformedProblem,
    NegativeOffDiagonal,
    NotEffective,
    NotSymmetric,
    OracleInapplicable,
    ProblemFormatError,
    WitnessNotFound,
    ZariskiError,
)
from .linalg import (
    InertiaCertificate,
    KernelBasis,
    inertia,
    is_negative_definite,
    is_negative_semidefinite,
    kernel_basis,
    solve_linear,
    verify_inertia,
)
from .lp import LpOutcome, LpProblem, LpStatus, lp_feasible_point, lp_maximize

__all__ = [
    "CurveConfiguration",
    "Divisor",
    "SupportSet",
    "leq_divisor",
    "restrict",
    "support",
    "validate_configuration",
    "NefWitness",
    "ZariskiResult",
    "case2_kernel_recursion",
    "decompose_with_stats",
    "find_nef_witness",
    "fujita_oracle",
    "is_nef",
    "maximal_nef_subdivisor",
    "nef_join",
    "verify_decomposition",
    "zariski_decompose",
    "InertiaCertificate",
    "KernelBasis",
    "inertia",
    "is_negative_definite",
    "is_negative_semidefinite",
    "kernel_basis",
    "solve_linear",
    "verify_inertia",
    "LpOutcome",
    "LpProblem",
    "LpStatus",
    "lp_feasible_point",
    "lp_maximize",
    "ZariskiError",
    "InputError",
    "InternalError",
    "NotSymmetric",
    "NegativeOffDiagonal",
    "DuplicateName",
    "EmptyConfiguration",
    "DimensionMismatch",
    "EmptySupport",
    "NotEffective",
    "MalformedProblem",
    "InputNotNef",
    "ProblemFormatError",
    "InternalInvariantViolated",
    "CertificateFailure",
    "JoinNotNef",
    "WitnessNotFound",
    "OracleInapplicable",
]
