"""Quantum-channel toolkit.

Construct channels from Kraus operators, convert among the Kraus,
superoperator, Choi, and Stinespring representations, generate the
self-complementary channel families, and evaluate entropy, capacity,
entanglement, and non-Markovianity measures on them.
"""

from .channels import (
    ChannelValidation,
    ChoiMatrix,
    CptpReport,
    KrausSet,
    StinespringUnitary,
    SuperOperator,
    apply,
    channel_rank,
    choi_matrix,
    choi_state,
    choi_to_kraus,
    choi_to_superop,
    complementary,
    compose,
    is_cptp,
    is_selfcomplementary,
    kraus,
    kraus_from_unitary,
    kraus_to_superop,
    random_cptp,
    selfcomplementarity_defect,
    stinespring,
    superop_to_choi,
    tensor_channel,
    validate_channel,
)
from .dynamics import (
    AffineQubitMap,
    Trajectory,
    affine_of_channel,
    bloch_image,
    bloch_vector,
    density_from_bloch,
    fibonacci_sphere,
    increase_duration,
    non_markovianity_measure,
    positive_variation,
    run_trajectory,
)
from .families import (
    FamilyParams,
    amplitude_damping,
    dephasing,
    dft_matrix,
    identity_channel,
    make_family,
    ndim_family,
    ndim_theta0,
    qubit_family_a,
    qubit_family_b,
    qutrit_family,
)
from .linalg import (
    DEFAULT_TOL,
    DensityMatrix,
    NumericalError,
    dagger,
    general_eigenvalues,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    partial_transpose,
    random_density_matrix,
    random_unitary,
    sanitize_nonnegative_spectrum,
    svd_values,
)
from .measures import (
    Ensemble,
    classical_capacity_lower_bound,
    coherent_information,
    concurrence,
    concurrence_closed_form,
    concurrence_from_negativity,
    entanglement_evolution_factor,
    holevo_chi,
    map_entropy,
    negativity,
    negativity_closed_form,
    spin_flip,
    von_neumann_entropy,
    wootters_spectrum,
)

__version__ = "0.1.0"
