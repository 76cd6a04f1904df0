"""tropx: exact max-plus (tropical) linear algebra.

Matrix exponential, spectral analysis (maximum cycle mean, critical
graph, eigenvectors), periodicity/robustness classification, and
generalized eigenvectors, all over exact rational arithmetic.
"""

from .errors import (
    CapExceededError,
    DimensionMismatchError,
    DivergenceError,
    DomainError,
    MatrixParseError,
    NonSquareError,
    OracleBoundError,
    ReducibleMatrixError,
    TropicalError,
    VerifyMismatchError,
)
from .expm import ExpResult, exp_eigenvalue_check, mat_exp, partial_exp
from .graphs import (
    FrobeniusForm,
    SpectralData,
    critical_graph,
    frobenius_normal_form,
    is_irreducible,
    max_cycle_mean,
    scc_decompose,
)
from .matrices import TropMatrix, parse_matrix, parse_vector
from .oracle import (
    OracleConfig,
    brute_exp,
    brute_period,
    enum_cycle_mean,
    simple_cycle_lengths,
)
from .periodicity import (
    GenEigRecord,
    OrbitReport,
    PeriodicityCertificate,
    exp_columns_gen_eig,
    exp_robustness_criterion,
    gen_eig_order,
    gen_orders_census,
    is_quasi_robust,
    is_robust,
    orbit,
    ultimate_period,
)
from .scalars import (
    EPSILON,
    Scalar,
    format_scalar,
    oplus,
    oplus_prime,
    otimes,
    parse_scalar,
    scalar_exp,
    scalar_log,
    trop_factorial,
)
from .spectral import EigenBasis, check_eigen, eigenvectors, kleene_star, metric_matrix

__version__ = "0.1.0"
