"""Entanglement and quantum teleportation of Dirac modes between accelerated observers.

The package computes, at desk scale, how the Unruh effect degrades
entanglement between two independently accelerated observers of Dirac
field modes, and what that does to teleportation fidelity — each quantity
both from closed-form expressions and from a brute-force state-vector
route, so the two can always be cross-checked.
"""

from .entanglement import (
    REGION_I_LAYOUT,
    AccelerationLimit,
    PhiReducedCoefficients,
    PsiReducedCoefficients,
    negativity,
    negativity_closed_form,
    negativity_limit,
    phi_coefficients,
    psi_coefficients,
    reduced_rho,
)
from .linalg import (
    NumericalError,
    eig_hermitian,
    kron,
    kron_ket,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .rindler import (
    SINGLE_MODE_LAYOUT,
    TWO_MODE_LAYOUT,
    U_INFINITE,
    BellFamily,
    expand_one_particle,
    expand_two_mode,
    expand_vacuum,
    mode_expansion_terms,
    ratio_from_u,
    u_from_ratio,
)
from .states import DensityMatrix, Ket, ModeLayout
from .teleport import (
    FIVE_MODE_LAYOUT,
    BellState,
    BranchOutcome,
    QubitState,
    average_fidelity,
    average_fidelity_limit,
    bell_project,
    bob_state,
    branch_probability,
    corrective_unitary,
    fidelity,
    fidelity_closed_form,
    initial_state,
    run_protocol,
)

__version__ = "0.1.0"

__all__ = [
    "AccelerationLimit",
    "BellFamily",
    "BellState",
    "BranchOutcome",
    "DensityMatrix",
    "FIVE_MODE_LAYOUT",
    "Ket",
    "ModeLayout",
    "NumericalError",
    "PhiReducedCoefficients",
    "PsiReducedCoefficients",
    "QubitState",
    "REGION_I_LAYOUT",
    "SINGLE_MODE_LAYOUT",
    "TWO_MODE_LAYOUT",
    "U_INFINITE",
    "average_fidelity",
    "average_fidelity_limit",
    "bell_project",
    "bob_state",
    "branch_probability",
    "corrective_unitary",
    "eig_hermitian",
    "expand_one_particle",
    "expand_two_mode",
    "expand_vacuum",
    "fidelity",
    "fidelity_closed_form",
    "initial_state",
    "kron",
    "kron_ket",
    "mode_expansion_terms",
    "negativity",
    "negativity_closed_form",
    "negativity_limit",
    "partial_trace",
    "partial_transpose",
    "phi_coefficients",
    "psi_coefficients",
    "ratio_from_u",
    "reduced_rho",
    "run_protocol",
    "trace_norm",
    "u_from_ratio",
]
