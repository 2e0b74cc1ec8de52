"""Schmidt number certification from operator Schmidt coefficients.

Compute the realignment spectrum of a bipartite density matrix, turn it into
a ladder of witness coefficients (exact lambda, the row-sum bounds theta,
zeta, eta, and the first-row sum P), and evaluate the resulting witnesses on
test states. Includes seeded random-state ensembles and generic nonnegative
matrix spectral-radius bounds.
"""
from .bounds import (
    BoundPair,
    RowSumStats,
    brauer_bounds,
    frobenius_bounds,
    ledermann_bounds,
    ostrowski_bounds,
    row_sum_stats,
    spectral_radius,
)
from .optim import OptimResult, eval_F, grid_oracle, maximize_F
from .osd import (
    OperatorBasis,
    OSCSpectrum,
    ccnr_value,
    correlation_matrix,
    gellmann_basis,
    matrix_unit_basis,
    osc,
    realign,
)
from .states import (
    BipartiteState,
    PureBipartite,
    ValidationError,
    haar_unitary,
    max_entangled,
    partial_transpose,
    purity,
    random_mixed,
    random_sn_bounded,
    rho0,
    rho_family,
    schmidt_coefficients,
)
from .witness import (
    ArrangementMatrix,
    SchmidtWitness,
    WitnessCoefficients,
    arrangement_set,
    build_witness,
    canonical_matrix,
    coefficients,
    eta,
    evaluate_witness,
    fidelity_bound,
    first_row_sum,
    lambda_exact,
    last_row_sum,
    theta,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteState",
    "PureBipartite",
    "ValidationError",
    "max_entangled",
    "rho0",
    "rho_family",
    "random_mixed",
    "random_sn_bounded",
    "haar_unitary",
    "partial_transpose",
    "purity",
    "schmidt_coefficients",
    "OSCSpectrum",
    "OperatorBasis",
    "realign",
    "osc",
    "matrix_unit_basis",
    "gellmann_basis",
    "correlation_matrix",
    "ccnr_value",
    "RowSumStats",
    "BoundPair",
    "row_sum_stats",
    "spectral_radius",
    "frobenius_bounds",
    "ledermann_bounds",
    "ostrowski_bounds",
    "brauer_bounds",
    "ArrangementMatrix",
    "WitnessCoefficients",
    "SchmidtWitness",
    "canonical_matrix",
    "arrangement_set",
    "lambda_exact",
    "first_row_sum",
    "last_row_sum",
    "theta",
    "zeta",
    "eta",
    "coefficients",
    "build_witness",
    "evaluate_witness",
    "fidelity_bound",
    "OptimResult",
    "eval_F",
    "maximize_F",
    "grid_oracle",
]
