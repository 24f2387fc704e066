"""Equivalent-beams toolkit.

SU(2) coherent beams and their Q-representation, equivalent states and
observables, Werner-family separability, the path-to-OAM information
transfer protocol, Laguerre-Gauss intensity rendering, and the
single-quNit variational classifier. The heavy lifting lives in the C++
extension module; this package re-exports its surface.
"""

from ._core import (
    ClassifierModel,
    EqbeamError,
    bell_project,
    build_unitary,
    c_entropy,
    coherent_beam_intensity,
    coherent_state,
    degree_of_polarization,
    encode,
    equivalence_check,
    equivalent_observable,
    equivalent_state,
    gell_mann_basis,
    generators,
    hadamard_general,
    i_diff,
    lg_field,
    map_multiqubit_index,
    mixed_beam_intensity,
    mixedness,
    partial_transpose,
    polarization_matrix,
    ppt_min_eig,
    predict,
    q_function,
    resolution_of_identity_residual,
    retrieve_bloch,
    run_protocol,
    separable_decomposition_t1,
    train,
    werner_state,
    werner_t_min,
    wigner_rotation,
)

__all__ = [
    "ClassifierModel",
    "EqbeamError",
    "bell_project",
    "build_unitary",
    "c_entropy",
    "coherent_beam_intensity",
    "coherent_state",
    "degree_of_polarization",
    "encode",
    "equivalence_check",
    "equivalent_observable",
    "equivalent_state",
    "gell_mann_basis",
    "generators",
    "hadamard_general",
    "i_diff",
    "lg_field",
    "map_multiqubit_index",
    "mixed_beam_intensity",
    "mixedness",
    "partial_transpose",
    "polarization_matrix",
    "ppt_min_eig",
    "predict",
    "q_function",
    "resolution_of_identity_residual",
    "retrieve_bloch",
    "run_protocol",
    "separable_decomposition_t1",
    "train",
    "werner_state",
    "werner_t_min",
    "wigner_rotation",
]

__version__ = "0.1.0"
