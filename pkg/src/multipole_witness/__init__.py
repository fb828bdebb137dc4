"""Collective multipole correlation witnesses for symmetric multiqubit states.

The package works in the Dicke basis of the N-qubit symmetric subspace:
irreducible spherical tensor operators, tensor moments of density matrices,
the bipartite composition law relating collective and product moments, and
the cross-correlation covariance witness with its threshold-scan tooling.
"""

from .angular import HalfInt, SignedSqrtRational, clebsch_gordan, triangle_ok, wigner6j, wigner9j
from .tensors import angular_momentum_matrices, tensor_basis, tensor_operator
from .states import (
    MomentTable,
    SeparableMixture,
    SymmetricState,
    coherent_amplitudes,
    coherent_state,
    dicke_moments,
    dicke_state,
    maximally_mixed_state,
    moments_of,
    noisy_family_state,
    random_separable_mixture,
    random_symmetric_state,
    state_from_dict,
    state_from_moments,
    state_to_dict,
)
from .bipartite import (
    ProductMomentTable,
    embed_in_product_basis,
    embedding_isometry,
    f_coefficient,
    f_factor,
    p_factor,
    product_moments,
    product_moments_oracle,
    reduce_to_subsystem,
    reduced_state,
    subsystem_scaling,
)
from .witness import (
    WitnessVerdict,
    cross_correlation,
    full_covariance,
    ppt_negativity,
    scaling_check,
    separable_scaling_check,
    spherical_to_cartesian,
    spin_squeezing_matrix,
    witness_verdict,
)
from .scan import ScanConfig, ScanRecord, figure1_report, records_to_csv, records_to_json, threshold_scan

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
