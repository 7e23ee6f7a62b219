"""Coupling-length certificates for r-fold cyclic covers over m hyperplanes, in exact arithmetic.

The length is not assumed: it is measured by building the Higgs map of the weight-one
curve family from the Jacobian ring of the Kummer cover, then lifting it to
the n-th exterior power.
"""

from .errors import (
    BadCoordinate,
    Collision,
    DependentBasis,
    InvalidInput,
    NotDivisible,
    ShapeMismatch,
    TooDeep,
    TooSmall,
    WrongLength,
)
from .higgs import (
    HiggsPencil,
    HodgeNumbers,
    LengthCertificate,
    WedgeHiggs,
    arrangement_pencil,
    coupling_length,
    coupling_length_diagonal,
    hodge_numbers_v1,
    hodge_numbers_w1,
    iterated_higgs,
    structural_upper_bound,
    wedge_power_higgs,
)
from .jacobian import (
    ArrangementParams,
    GradedPieceBasis,
    HiggsMatrixReport,
    ModuliPoint,
    cross_check_explicit_matrix,
    cross_check_prop44_matrix,
    default_point,
    graded_piece,
    higgs_matrix,
    jacobian_generators,
    relation_matrix,
    source_piece,
    target_piece,
    validate_params,
    validate_point,
    vandermonde_source_basis,
)
from .linalg import Matrix, cokernel_coordinates, kernel_basis, rank, row_echelon
from .polyring import Monomial, Polynomial, bidegree, character, enumerate_monomials, multiply
from .sampling import sample_directions

__version__ = "0.1.0"
