"""Teleportation through a shared Bell pair observed from accelerated frames.

Alice holds the qubit Q and mode A, Bob holds mode B; both observers
accelerate uniformly. The protocol is simulated literally — build the
five-mode state, project (Q, A_I) onto a Bell vector, trace down to Bob's
mode, apply the corrective sign matrix — and each step also has a printed
closed form, so the two can be checked against each other.

Bell-vector convention: ``|psi+->`` = (|01> +- |10>)/sqrt(2) and
``|phi+->`` = (|00> +- |11>)/sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import partial_trace
from .rindler import (
    BellFamily,
    check_acceleration,
    check_pair_normalized,
    minkowski_pair_terms,
    mode_expansion_terms,
)
from .states import DensityMatrix, Ket, ModeLayout

#: qubit, then region-I modes of A and B, then their region-II partners
FIVE_MODE_LAYOUT = ModeLayout(("Q", "A_I", "B_I", "A_II", "B_II"))

_SQRT_HALF = 1.0 / math.sqrt(2.0)

#: branches with projection probability below this are reported as impossible
ZERO_PROBABILITY_TOL = 1e-30


@dataclass(frozen=True)
class QubitState:
    """The single-qubit state to teleport: amp0 |0> + amp1 |1>."""

    amp0: complex
    amp1: complex

    def __post_init__(self):
        check_pair_normalized(self.amp0, self.amp1, "amp0, amp1")

    @classmethod
    def normalized(cls, amp0: complex, amp1: complex) -> "QubitState":
        scale = math.sqrt(abs(amp0) ** 2 + abs(amp1) ** 2)
        if scale == 0.0:
            raise ValueError("qubit amplitudes cannot both be zero")
        return cls(complex(amp0) / scale, complex(amp1) / scale)

    def vector(self) -> np.ndarray:
        return np.array([self.amp0, self.amp1], dtype=complex)


class BellState(Enum):
    """The four Bell states, used both as resources and as measurement outcomes."""

    PSI_PLUS = ("psi", +1)
    PSI_MINUS = ("psi", -1)
    PHI_PLUS = ("phi", +1)
    PHI_MINUS = ("phi", -1)

    @property
    def family(self) -> BellFamily:
        return BellFamily(self.value[0])

    @property
    def sign(self) -> int:
        return self.value[1]

    def vector(self) -> np.ndarray:
        """Two-qubit amplitude vector in the (first, second) product basis."""
        v = np.zeros(4, dtype=complex)
        if self.family is BellFamily.PSI:
            v[1] = _SQRT_HALF
            v[2] = self.sign * _SQRT_HALF
        else:
            v[0] = _SQRT_HALF
            v[3] = self.sign * _SQRT_HALF
        return v


@dataclass(frozen=True)
class BranchOutcome:
    """One Bell-measurement branch: outcome, probability, Bob's corrected state."""

    result: BellState
    probability: float
    bob_state: DensityMatrix | None  # after the corrective unitary; None if impossible
    fidelity: float | None


def initial_state(qubit: QubitState, shared: BellState, u_alice: float, u_bob: float) -> Ket:
    """Qubit tensor shared pair, expanded over [Q, A_I, B_I, A_II, B_II].

    Built compositionally from the single-mode expansions, term by term, so
    it stays independent of any transcribed multi-term expression.
    """
    check_acceleration(u_alice, "u_alice")
    check_acceleration(u_bob, "u_bob")
    pair = minkowski_pair_terms(shared.family, _SQRT_HALF, shared.sign * _SQRT_HALF)
    amps: dict[int, complex] = {}
    for q_bit, q_amp in ((0, qubit.amp0), (1, qubit.amp1)):
        if q_amp == 0:
            continue
        for a_occ, b_occ, coeff in pair:
            for a_i, a_ii, wa in mode_expansion_terms(a_occ, u_alice):
                for b_i, b_ii, wb in mode_expansion_terms(b_occ, u_bob):
                    idx = (q_bit << 4) | (a_i << 3) | (b_i << 2) | (a_ii << 1) | b_ii
                    amps[idx] = amps.get(idx, 0j) + q_amp * coeff * wa * wb
    return Ket(FIVE_MODE_LAYOUT, {i: a for i, a in amps.items() if a != 0})


def bell_project(state: Ket, result: BellState) -> tuple[float, Ket | None]:
    """Project modes (Q, A_I) onto a Bell vector.

    Returns the branch probability and the renormalized post-measurement
    state on the full five-mode layout, or ``None`` when the branch has
    (numerically) zero probability.
    """
    if state.layout != FIVE_MODE_LAYOUT:
        raise ValueError(f"expected the five-mode layout {FIVE_MODE_LAYOUT.modes}")
    tensor = state.to_array().reshape(2, 2, 2, 2, 2)
    bell = result.vector().reshape(2, 2)
    residual = np.einsum("qa,qabxy->bxy", bell.conj(), tensor)
    probability = float(np.vdot(residual, residual).real)
    if probability < ZERO_PROBABILITY_TOL:
        return 0.0, None
    post = np.einsum("qa,bxy->qabxy", bell, residual).reshape(-1) / math.sqrt(probability)
    return probability, Ket.from_array(FIVE_MODE_LAYOUT, post)


def bob_state(post_state: Ket) -> DensityMatrix:
    """Bob's mode after the measurement: trace out everything but B_I."""
    return partial_trace(post_state, keep=("B_I",))


# Corrective sign matrices, keyed by (shared resource, measured outcome).
# diag(a, b) = a|0><0| + b|1><1|;  offdiag(a, b) = a|0><1| + b|1><0|.
def _diag(a: int, b: int) -> np.ndarray:
    return np.array([[a, 0], [0, b]], dtype=complex)


def _offdiag(a: int, b: int) -> np.ndarray:
    return np.array([[0, a], [b, 0]], dtype=complex)


_CORRECTIONS: dict[tuple[BellState, BellState], np.ndarray] = {
    (BellState.PSI_PLUS, BellState.PSI_PLUS): _diag(1, 1),
    (BellState.PSI_MINUS, BellState.PSI_PLUS): _diag(1, -1),
    (BellState.PSI_PLUS, BellState.PSI_MINUS): _diag(-1, 1),
    (BellState.PSI_MINUS, BellState.PSI_MINUS): _diag(-1, -1),
    (BellState.PSI_PLUS, BellState.PHI_PLUS): _offdiag(1, 1),
    (BellState.PSI_MINUS, BellState.PHI_PLUS): _offdiag(-1, 1),
    (BellState.PSI_PLUS, BellState.PHI_MINUS): _offdiag(-1, 1),
    (BellState.PSI_MINUS, BellState.PHI_MINUS): _offdiag(1, 1),
    (BellState.PHI_PLUS, BellState.PSI_PLUS): _offdiag(1, 1),
    (BellState.PHI_MINUS, BellState.PSI_PLUS): _offdiag(-1, 1),
    (BellState.PHI_PLUS, BellState.PSI_MINUS): _offdiag(-1, 1),
    (BellState.PHI_MINUS, BellState.PSI_MINUS): _offdiag(1, 1),
    (BellState.PHI_PLUS, BellState.PHI_PLUS): _diag(1, 1),
    (BellState.PHI_MINUS, BellState.PHI_PLUS): _diag(1, -1),
    (BellState.PHI_PLUS, BellState.PHI_MINUS): _diag(-1, 1),
    (BellState.PHI_MINUS, BellState.PHI_MINUS): _diag(-1, -1),
}


def corrective_unitary(shared: BellState, result: BellState) -> np.ndarray:
    """Bob's corrective transformation for a given (resource, outcome) pair."""
    return _CORRECTIONS[(shared, result)].copy()


def fidelity(qubit: QubitState, rho: DensityMatrix, unitary: np.ndarray) -> float:
    """Overlap of the corrected state with the intended qubit: <Q|U^t rho U|Q>."""
    w = np.asarray(unitary, dtype=complex) @ qubit.vector()
    value = complex(w.conj() @ rho.matrix @ w)
    return float(value.real)


def branch_probability(result_family: BellFamily, qubit: QubitState, u_alice: float) -> float:
    """Probability of one specific Bell outcome (closed form).

    Depends only on whether the outcome is a psi- or phi-type state and on
    Alice's acceleration; the same expressions hold for both shared
    resources. The four outcomes sum to one.
    """
    ca = math.cos(check_acceleration(u_alice, "u_alice"))
    sa = math.sin(u_alice)
    g = abs(qubit.amp0) ** 2
    d = abs(qubit.amp1) ** 2
    if result_family is BellFamily.PSI:
        return (g + g * sa**2 + d * ca**2) / 4.0
    return (d + d * sa**2 + g * ca**2) / 4.0


def fidelity_closed_form(
    shared_family: BellFamily,
    result_family: BellFamily,
    qubit: QubitState,
    u_alice: float,
    u_bob: float,
) -> float:
    """Printed branch fidelity for a (shared family, outcome family) pair.

    The outcome sign never enters: plus and minus outcomes of the same
    family give identical fidelities once corrected.
    """
    ca = math.cos(check_acceleration(u_alice, "u_alice"))
    cb = math.cos(check_acceleration(u_bob, "u_bob"))
    sa, sb = math.sin(u_alice), math.sin(u_bob)
    g = abs(qubit.amp0) ** 2
    d = abs(qubit.amp1) ** 2
    if result_family is BellFamily.PSI:
        norm_sq = d * ca**2 + g * (1.0 + sa**2)
    else:
        # phi-type outcomes: swap the roles of the two qubit weights
        norm_sq = g * ca**2 + d * (1.0 + sa**2)
        g, d = d, g
    if shared_family is BellFamily.PSI:
        numerator = (g * cb + d * ca) ** 2 + g * d * (sa**2 + sb**2)
    else:
        numerator = (
            g**2 * (1.0 + sa**2 * sb**2)
            + d**2 * ca**2 * cb**2
            + g * d * (sa**2 * cb**2 + ca**2 * sb**2 + 2.0 * ca * cb)
        )
    return numerator / norm_sq


def average_fidelity(shared_family: BellFamily, qubit: QubitState, u_alice: float, u_bob: float) -> float:
    """Probability-weighted fidelity over the four branches (closed form).

    Symmetric under exchange of the two qubit amplitudes' moduli.
    """
    ca = math.cos(check_acceleration(u_alice, "u_alice"))
    cb = math.cos(check_acceleration(u_bob, "u_bob"))
    sa, sb = math.sin(u_alice), math.sin(u_bob)
    gd = (abs(qubit.amp0) * abs(qubit.amp1)) ** 2
    if shared_family is BellFamily.PSI:
        return 0.5 * (
            ca**2 + cb**2 + 2.0 * gd * (sa**2 - ca**2 + sb**2 - cb**2 + 2.0 * ca * cb)
        )
    return 0.5 * (
        1.0
        + sa**2 * sb**2
        + ca**2 * cb**2
        + 2.0
        * gd
        * (sa**2 * cb**2 + ca**2 * sb**2 - sa**2 * sb**2 - ca**2 * cb**2 + 2.0 * ca * cb - 1.0)
    )


def average_fidelity_limit(shared_family: BellFamily, qubit: QubitState) -> float:
    """Average fidelity when both accelerations are infinite.

    3/4 for a shared phi pair regardless of the qubit; 1/2 + |amp0 amp1|^2
    (at most 3/4) for a shared psi pair.
    """
    if shared_family is BellFamily.PHI:
        return 0.75
    return 0.5 + (abs(qubit.amp0) * abs(qubit.amp1)) ** 2


def run_protocol(qubit: QubitState, shared: BellState, u_alice: float, u_bob: float) -> list[BranchOutcome]:
    """Simulate all four measurement branches end to end.

    Probabilities sum to one and the probability-weighted fidelity equals
    :func:`average_fidelity`.
    """
    state = initial_state(qubit, shared, u_alice, u_bob)
    outcomes = []
    for result in BellState:
        probability, post = bell_project(state, result)
        if post is None:
            outcomes.append(BranchOutcome(result, 0.0, None, None))
            continue
        unitary = corrective_unitary(shared, result)
        rho = bob_state(post)
        corrected = DensityMatrix(
            rho.layout, unitary.conj().T @ rho.matrix @ unitary
        )
        outcomes.append(
            BranchOutcome(result, probability, corrected, fidelity(qubit, rho, unitary))
        )
    return outcomes
