"""Exact-arithmetic intertwining codes over finite fields.

The package computes, for families of square matrices A_i (r x r) and B_i
(s x s) over GF(q), the space of r x s matrices X with A_i X = X B_i for all
i, viewed as a linear code of length r*s: canonical kernel bases, the
closed-form dimension via primary decomposition and conjugate partitions,
exhaustive minimum distances, dimension bounds, and constructions reaching
minimum distance floor(r/k) * s with verifiable certificates.
"""

from .errors import (
    BadKError,
    BadModulusError,
    BothZeroError,
    BudgetExceededError,
    ConstantPolynomialError,
    DependentPrefixError,
    DivisionByZeroError,
    EmptyListError,
    FieldMismatchError,
    FieldTooSmallError,
    IntertwineError,
    InternalInconsistencyError,
    LengthMismatchError,
    NotIrreducibleError,
    NotMonicError,
    NotPrimeError,
    NotSquareError,
    SingularError,
    SizeMismatchError,
    ZeroCodeError,
    ZeroPolynomialError,
)
from .fields import FiniteField, is_prime
from .polys import (
    Factorization,
    Poly,
    factor,
    gcd,
    is_irreducible,
    squarefree_decomposition,
)
from .matrices import (
    Matrix,
    companion_matrix,
    complete_invertible,
    direct_sum,
    poly_eval,
)
from .partitions import Partition, conjugate_product, min_sum, nilpotent_pair_dim
from .canonical import (
    PrimaryComponent,
    PrimaryDecomposition,
    generalized_jordan_matrix,
    nilpotent_matrix,
    primary_decomposition,
    spectral_summary,
)
from .codes import (
    DEFAULT_BUDGET,
    CodeParams,
    DimensionBreakdown,
    FactorTerm,
    IntertwiningCode,
    conjugate_code,
    dimension_formula,
    intertwiner_basis,
    is_zero_code,
    min_distance,
    rank_bounds,
    spectral_bounds,
    syndrome,
)
from .construct import (
    Certificate,
    CertificateCheck,
    VerificationReport,
    construct_code,
    construct_extremal,
    diagonal_seed,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BadKError",
    "BadModulusError",
    "BothZeroError",
    "BudgetExceededError",
    "Certificate",
    "CertificateCheck",
    "CodeParams",
    "ConstantPolynomialError",
    "DEFAULT_BUDGET",
    "DependentPrefixError",
    "DimensionBreakdown",
    "DivisionByZeroError",
    "EmptyListError",
    "Factorization",
    "FactorTerm",
    "FieldMismatchError",
    "FieldTooSmallError",
    "FiniteField",
    "IntertwineError",
    "IntertwiningCode",
    "InternalInconsistencyError",
    "LengthMismatchError",
    "Matrix",
    "NotIrreducibleError",
    "NotMonicError",
    "NotPrimeError",
    "NotSquareError",
    "Partition",
    "Poly",
    "PrimaryComponent",
    "PrimaryDecomposition",
    "SingularError",
    "SizeMismatchError",
    "VerificationReport",
    "ZeroCodeError",
    "ZeroPolynomialError",
    "companion_matrix",
    "complete_invertible",
    "conjugate_code",
    "conjugate_product",
    "construct_code",
    "construct_extremal",
    "diagonal_seed",
    "dimension_formula",
    "direct_sum",
    "factor",
    "gcd",
    "generalized_jordan_matrix",
    "intertwiner_basis",
    "is_irreducible",
    "is_prime",
    "is_zero_code",
    "min_distance",
    "min_sum",
    "nilpotent_matrix",
    "nilpotent_pair_dim",
    "poly_eval",
    "primary_decomposition",
    "rank_bounds",
    "spectral_bounds",
    "spectral_summary",
    "squarefree_decomposition",
    "syndrome",
    "verify_certificate",
]
