"""Continuous time evolution of quantum logic gates and their real-space representations."""

from .bloch import (
    BlochPoint,
    Trajectory,
    bloch_point,
    gate_axis,
    latitude_residual,
    qubit_from_angles,
    rebit_deviation,
    sample_trajectory,
)
from .endomorphism import (
    BasisElement,
    SymmetryClass,
    basis_element,
    classify,
    commuting_j_positions,
    expand,
    mapping_image_dimension,
    reconstruct,
    verify_basis,
)
from .entanglement import (
    InteractionSpec,
    bell_prepare,
    cnot_at_time,
    cnot_interaction,
    concurrence,
    evolve_bipartite,
    phase_factorizable,
    tensor_state,
)
from .gates import GateSpec, HamiltonianSpec, catalog, effective_hamiltonian, gate_at_time, transfer_common_eigs
from .numerics import EigenDecomposition, determinant, eig_normal, frobenius, kron
from .realspace import (
    Convention,
    RealEmbedding,
    convention_permutation,
    embed,
    hermitian_embed_check,
    is_complex_structure,
    is_special_orthogonal,
    j_matrix,
    so_generator,
    unembed,
)

__version__ = "0.1.0"
