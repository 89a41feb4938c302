"""Exact-arithmetic toolkit for finite-dimensional evolution algebras.

Highlights: three field backends (exact rationals, prime fields,
tolerance-based reals), canonical RREF subspaces, natural-basis
extraction for subalgebras of regular algebras, one-dimensional and
codimension-one subalgebra search, and a brute-force oracle over prime
fields that cross-checks everything.
"""

from .algebra import Element, EvolutionAlgebra
from .errors import (
    BadIndices,
    DimensionTooSmall,
    EvoAlgError,
    FileFormatError,
    IdenticallyZeroPolynomial,
    InversionOfZero,
    MalformedScalar,
    MalformedVector,
    MixedAlgebras,
    MixedFieldSpecs,
    NonFiniteValue,
    NonSquareMatrix,
    NonSquareStructure,
    NotASubalgebra,
    NotFiniteField,
    NotRegular,
    ParseError,
    SingularMatrix,
    TooLarge,
    UnsupportedFieldDimension,
    ZeroDenominator,
    ZeroPair,
)
from .field import (
    APPROX_REALS,
    PRIME_FIELD,
    RATIONALS,
    FieldScalar,
    FieldSpec,
    LowDegreePoly,
    nonzero_roots,
    scalar_parse,
)
from .finder import (
    CASE_DROP_P,
    CASE_DROP_Q,
    CASE_ROOT,
    CASE_ROW,
    CodimOneFound,
    PairDiagnostics,
    PairSubmatrix,
    SubalgebraReport,
    closure_condition,
    closure_cubic,
    codim1_for_pair,
    codim1_necessary,
    enumerate_codim1,
    onedim_residual,
    pair_submatrix,
    solve_onedim,
)
from .linalg import Matrix, RrefResult, determinant, inverse, matvec, rref
from .oracle import (
    enumerate_subalgebras,
    enumerate_subspaces,
    enumerate_subspaces_of,
    gaussian_binomial,
    subspace_count,
)
from .subspace import Subspace

__version__ = "0.1.0"

__all__ = [
    "APPROX_REALS",
    "BadIndices",
    "CASE_DROP_P",
    "CASE_DROP_Q",
    "CASE_ROOT",
    "CASE_ROW",
    "CodimOneFound",
    "DimensionTooSmall",
    "Element",
    "EvoAlgError",
    "EvolutionAlgebra",
    "FieldScalar",
    "FieldSpec",
    "FileFormatError",
    "IdenticallyZeroPolynomial",
    "InversionOfZero",
    "LowDegreePoly",
    "MalformedScalar",
    "MalformedVector",
    "Matrix",
    "MixedAlgebras",
    "MixedFieldSpecs",
    "NonFiniteValue",
    "NonSquareMatrix",
    "NonSquareStructure",
    "NotASubalgebra",
    "NotFiniteField",
    "NotRegular",
    "PRIME_FIELD",
    "PairDiagnostics",
    "PairSubmatrix",
    "ParseError",
    "RATIONALS",
    "RrefResult",
    "SingularMatrix",
    "SubalgebraReport",
    "Subspace",
    "TooLarge",
    "UnsupportedFieldDimension",
    "ZeroDenominator",
    "ZeroPair",
    "closure_condition",
    "closure_cubic",
    "codim1_for_pair",
    "codim1_necessary",
    "determinant",
    "enumerate_codim1",
    "enumerate_subalgebras",
    "enumerate_subspaces",
    "enumerate_subspaces_of",
    "gaussian_binomial",
    "inverse",
    "matvec",
    "nonzero_roots",
    "onedim_residual",
    "pair_submatrix",
    "rref",
    "scalar_parse",
    "solve_onedim",
    "subspace_count",
]
