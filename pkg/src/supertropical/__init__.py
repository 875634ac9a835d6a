"""Exact linear algebra over the ghost-layered max-plus semiring.

Scalars carry an exact rational magnitude and a tangible/ghost/zero
layer; on top of them sit tropical polynomials with essential forms and
corner roots, matrix algebra with permanent-style determinants and
adjoints, the adjoint-column eigenvector algorithm with dependence
analysis, and randomized suites that verify the calculus' laws.
"""

from .eigen import (
    DependenceVerdict,
    Eigenvalue,
    EigenvectorRecord,
    FactorizationError,
    GeneralizedEigenReport,
    GeneralizedSubspace,
    Spectrum,
    diagonal_distinct_after_power,
    difference_criterion,
    eigenmatrix,
    eigenvalues,
    eigenvector,
    eigenvector_matrix,
    generalized_subspaces,
    is_generalized_eigenvector,
    power_eigenpair_holds,
    spectrum,
    vectors_dependent,
)
from .laws import (
    LawReport,
    REPORT_SUITES,
    THEOREM_SUITES,
    TrialConfig,
    conjecture_experiment,
    random_matrix,
    run_suites,
)
from .matrices import (
    CharCoefficient,
    CharReport,
    DEFAULT_CHAR_BOUND,
    DEFAULT_DET_BOUND,
    DetResult,
    Matrix,
    MatrixParseError,
    SizeBoundError,
    StrongNonsingularity,
    diagonal,
    eval_poly,
    format_matrix,
    format_permutation,
    from_columns,
    gaussian,
    generalized_permutation,
    identity,
    mat_vec,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    permutation_matrix,
    row_multiplier,
    strong_nonsingularity,
    transposition,
    vec_add,
    vec_as_tangible,
    vec_ghost_surpasses,
    vec_is_ghost_or_zero,
    vec_scale,
)
from .polynomials import (
    CornerRoot,
    GhostStretch,
    PolynomialParseError,
    PrimaryFactorization,
    RootProfile,
    TropicalPolynomial,
    expand_primary,
    parse_polynomial,
)
from .scalars import (
    Layer,
    NonInvertibleError,
    ONE,
    Scalar,
    ScalarParseError,
    ZERO,
    ghost,
    parse_scalar,
    tangible,
)

__version__ = "0.1.0"
