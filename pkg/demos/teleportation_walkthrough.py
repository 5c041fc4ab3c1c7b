"""One teleportation run, step by step, with both observers accelerating.

Alice teleports gamma|0> + delta|1> to Bob through a shared Bell pair. Each
protocol stage is shown explicitly — the expanded five-mode state, the four
Bell-measurement branches, Bob's mixed state before and after correction —
and every simulated number is placed next to its closed form.
"""

import math

import numpy as np

from rindlerqi import (
    BellFamily,
    BellState,
    QubitState,
    average_fidelity,
    bell_project,
    bob_state,
    branch_probability,
    corrective_unitary,
    fidelity,
    fidelity_closed_form,
    initial_state,
    run_protocol,
)

qubit = QubitState(0.6, 0.8)
shared = BellState.PSI_PLUS
u_alice, u_bob = 0.55, 0.30

print(f"teleporting (0.6)|0> + (0.8)|1> through {shared.name} "
      f"at u_a = {u_alice}, u_b = {u_bob}\n")

# ---------------------------------------------------------------------------
# 1. The shared state, as the accelerated observers describe it.
#
# Mode order is [Q, A_I, B_I, A_II, B_II]; the region-II bits are invisible
# to Alice and Bob and will be traced out.

state = initial_state(qubit, shared, u_alice, u_bob)
print(f"expanded initial state ({len(state.amplitudes)} terms, "
      f"norm {state.norm():.12f}):")
for idx in sorted(state.amplitudes):
    bits = "".join(str(b) for b in state.layout.bits_of(idx))
    amp = state.amplitudes[idx]
    print(f"  |{bits[0]} {bits[1]}{bits[2]}>_I |{bits[3]}{bits[4]}>_II   {amp:+.4f}")

# ---------------------------------------------------------------------------
# 2. Alice measures (Q, A_I) in the Bell basis.
#
# Each outcome leaves Bob with a mixed state; the correction he applies is
# fixed by the (resource, outcome) pair alone.

print("\nbranch walkthrough:")
for result in BellState:
    probability, post = bell_project(state, result)
    rho = bob_state(post)
    unitary = corrective_unitary(shared, result)
    branch_fidelity = fidelity(qubit, rho, unitary)
    p_closed = branch_probability(result.family, qubit, u_alice)
    f_closed = fidelity_closed_form(shared.family, result.family, qubit, u_alice, u_bob)
    print(f"  outcome {result.name}:")
    print(f"    probability {probability:.6f}   (closed form {p_closed:.6f})")
    print(f"    Bob before correction: diag = ({rho.matrix[0, 0].real:.4f}, "
          f"{rho.matrix[1, 1].real:.4f}), coherence = {rho.matrix[0, 1]:+.4f}")
    print(f"    correction U = {np.round(unitary.real).astype(int).tolist()}")
    print(f"    fidelity {branch_fidelity:.6f}   (closed form {f_closed:.6f})")

# ---------------------------------------------------------------------------
# 3. The average over outcomes, and how the two resources compare.

outcomes = run_protocol(qubit, shared, u_alice, u_bob)
weighted = sum(o.probability * o.fidelity for o in outcomes)
print(f"\nprobability-weighted fidelity: {weighted:.6f}")
print(f"closed-form average:           "
      f"{average_fidelity(shared.family, qubit, u_alice, u_bob):.6f}")

print("\nsame qubit, same accelerations, phi resource instead:")
f_phi = average_fidelity(BellFamily.PHI, qubit, u_alice, u_bob)
f_psi = average_fidelity(BellFamily.PSI, qubit, u_alice, u_bob)
print(f"  average with psi pair: {f_psi:.6f}")
print(f"  average with phi pair: {f_phi:.6f}   (never worse for any settings)")
