"""Numerics for graded symmetric-algebra pairings over a finite-dimensional
complex Hilbert space: exact polynomial algebra, antilinear symmetric maps and
their Takagi diagonalization, Gaussian elements with closed-form overlaps, and
degreewise series pairings with scaled regularization and Abel extrapolation.
"""

from .algebra import (
    GradedElement,
    add,
    antidual_product,
    basis_size,
    coproduct_oracle,
    embed_product,
    enumerate_basis,
    evaluate,
    from_vector,
    inner_product,
    normalization,
    permanent_inner_oracle,
    scale,
    symmetric_power_matrix,
    symmetric_product,
    vacuum,
)
from .antilinear import (
    AntilinearSymmetricMap,
    TakagiFactorization,
    compose,
    conjugation,
    map_from_quadratic,
    operator_norm,
    quadratic_from_map,
    random_symmetric,
    siegel_membership,
    takagi,
)
from .detsqrt import det_sqrt, in_gv, segment_branch_check
from .errors import (
    DimensionMismatch,
    DomainError,
    FockpairError,
    GuardExceeded,
    InsufficientHorizon,
)
from .gaussian import GaussianSeed, gaussian_series, norm_sq_closed, pair_closed
from .pairing import (
    HoelderCheck,
    HoelderNorms,
    PairingReport,
    RegularizationConfig,
    abel_pairing,
    degree_terms,
    divergence_demo,
    graded_unitary_apply,
    hoelder_norm,
    hoelder_pairing_check,
    number_op_pow,
    pair_swap,
    pairing_1,
    pairing_t,
    sequence_element,
    sequence_noninvariance_demo,
    wynn_epsilon,
)

__version__ = "0.1.0"

__all__ = [
    "GradedElement",
    "add",
    "antidual_product",
    "basis_size",
    "coproduct_oracle",
    "embed_product",
    "enumerate_basis",
    "evaluate",
    "from_vector",
    "inner_product",
    "normalization",
    "permanent_inner_oracle",
    "scale",
    "symmetric_power_matrix",
    "symmetric_product",
    "vacuum",
    "AntilinearSymmetricMap",
    "TakagiFactorization",
    "compose",
    "conjugation",
    "map_from_quadratic",
    "operator_norm",
    "quadratic_from_map",
    "random_symmetric",
    "siegel_membership",
    "takagi",
    "det_sqrt",
    "in_gv",
    "segment_branch_check",
    "DimensionMismatch",
    "DomainError",
    "FockpairError",
    "GuardExceeded",
    "InsufficientHorizon",
    "GaussianSeed",
    "gaussian_series",
    "norm_sq_closed",
    "pair_closed",
    "HoelderCheck",
    "HoelderNorms",
    "PairingReport",
    "RegularizationConfig",
    "abel_pairing",
    "degree_terms",
    "divergence_demo",
    "graded_unitary_apply",
    "hoelder_norm",
    "hoelder_pairing_check",
    "number_op_pow",
    "pair_swap",
    "pairing_1",
    "pairing_t",
    "sequence_element",
    "sequence_noninvariance_demo",
    "wynn_epsilon",
    "__version__",
]
