"""Closed-form Schmidt decompositions and orthogonal-set construction for
two-qubit states, with an independent eigensolver route for verification,
spectral mixed-state building, and a JSON command-line front end."""

from .core import (
    DEFAULT_TOL,
    KET0,
    KET1,
    MINUS,
    PHI_MINUS,
    PHI_PLUS,
    PLUS,
    PSI_MINUS,
    PSI_PLUS,
    VERIFY_TOL,
    apply_local,
    concurrence,
    coefficient_matrix,
    gram,
    gram_offdiagonal,
    inner,
    is_diagonal,
    is_unitary,
    make_qubit,
    make_state,
    orthogonal_complement,
    tensor,
)
from .errors import (
    AccidentallyDiagonalError,
    BadWeightsError,
    ConditionViolatedError,
    COutOfRangeError,
    DegenerateParametersError,
    DiagonalError,
    GammaOutOfRangeError,
    InvalidDensityError,
    NotDiagonalError,
    NotFiniteError,
    NotNormalizedError,
    NotOrthogonalError,
    NotOrthonormalBasisError,
    NotPPPError,
    NotUnitaryError,
    QuantumStateError,
    UnknownTypeError,
    ZeroParameterError,
    ZeroVectorError,
)
from .schmidt import (
    SchmidtDecomposition,
    reconstruct,
    schmidt,
    schmidt_diagonal,
    schmidt_nondiagonal,
)
from .pairs import (
    A_SIDE,
    B_SIDE,
    OrthoPair,
    construct_ee_diagonal,
    construct_ee_nondiagonal,
    construct_ep,
    construct_pe_diagonal,
    construct_pe_nondiagonal,
    construct_pp,
)
from .triples import (
    OrthoTriple,
    construct_ppe_case1,
    construct_ppe_case2,
    construct_ppe_case3,
    construct_ppp,
    orthonormal_qubit_basis,
)
from .bases import (
    OrthoBasis,
    complete_ppp,
    construct_mmee_diagonal,
    construct_mmee_nondiagonal,
    construct_pm,
    construct_pmee,
    construct_ppee_case1,
    construct_ppee_case2,
    construct_ppee_case3,
    construct_pppp,
)
from .oracle import (
    SampleSpec,
    SplitMix64,
    StateReport,
    VerificationReport,
    classify,
    oracle_schmidt,
    random_qubit,
    random_qubit_basis,
    random_state,
    random_unitary,
    sample,
    verify_set,
)
from .mixed import reduce_a, reduce_b, spectral_mix

__version__ = "0.1.0"
