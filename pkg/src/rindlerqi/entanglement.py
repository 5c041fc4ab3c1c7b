"""Reduced states and negativity for two entangled Dirac modes.

Two routes to every number: ``reduced_rho`` assembles the region-I density
matrix from closed-form coefficients and ``negativity_closed_form``
evaluates an explicit eigenvalue list, while ``partial_trace`` over the
expanded state plus ``negativity`` provide the generic numerical check.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable, NamedTuple

import numpy as np

from .linalg import NumericalError, partial_transpose, trace_norm
from .rindler import BellFamily, check_acceleration, check_pair_normalized
from .states import DensityMatrix, ModeLayout

#: region-I modes of Alice and Bob, the support of every reduced state here
REGION_I_LAYOUT = ModeLayout(("A_I", "B_I"))

_CLAMP_TOL = 1e-12


class PsiReducedCoefficients(NamedTuple):
    """Entries of the region-I state for the alpha|01> + beta|10> family."""

    population_01: float
    population_10: float
    population_11: float
    coherence: complex  # between |01> and |10>


class PhiReducedCoefficients(NamedTuple):
    """Entries of the region-I state for the alpha|00> + beta|11> family."""

    population_00: float
    population_01: float
    population_10: float
    population_11: float
    coherence: complex  # between |00> and |11>


def psi_coefficients(alpha, beta, u_alice, u_bob) -> PsiReducedCoefficients:
    check_pair_normalized(alpha, beta)
    ca = math.cos(check_acceleration(u_alice, "u_alice"))
    cb = math.cos(check_acceleration(u_bob, "u_bob"))
    sa, sb = math.sin(u_alice), math.sin(u_bob)
    return PsiReducedCoefficients(
        population_01=abs(alpha) ** 2 * ca**2,
        population_10=abs(beta) ** 2 * cb**2,
        population_11=abs(alpha) ** 2 * sa**2 + abs(beta) ** 2 * sb**2,
        coherence=alpha * np.conj(beta) * ca * cb,
    )


def phi_coefficients(alpha, beta, u_alice, u_bob) -> PhiReducedCoefficients:
    check_pair_normalized(alpha, beta)
    ca = math.cos(check_acceleration(u_alice, "u_alice"))
    cb = math.cos(check_acceleration(u_bob, "u_bob"))
    sa, sb = math.sin(u_alice), math.sin(u_bob)
    return PhiReducedCoefficients(
        population_00=abs(alpha) ** 2 * ca**2 * cb**2,
        population_01=abs(alpha) ** 2 * ca**2 * sb**2,
        population_10=abs(alpha) ** 2 * sa**2 * cb**2,
        population_11=abs(alpha) ** 2 * sa**2 * sb**2 + abs(beta) ** 2,
        coherence=alpha * np.conj(beta) * ca * cb,
    )


def reduced_rho(family: BellFamily, alpha, beta, u_alice, u_bob) -> DensityMatrix:
    """Region-I density matrix of the entangled pair, on modes (A_I, B_I).

    Assembled from the closed-form coefficients; agrees entrywise with
    tracing region II out of :func:`rindlerqi.rindler.expand_two_mode`.
    """
    m = np.zeros((4, 4), dtype=complex)
    if family is BellFamily.PSI:
        c = psi_coefficients(alpha, beta, u_alice, u_bob)
        m[1, 1] = c.population_01
        m[2, 2] = c.population_10
        m[3, 3] = c.population_11
        m[1, 2] = c.coherence
        m[2, 1] = np.conj(c.coherence)
    elif family is BellFamily.PHI:
        c = phi_coefficients(alpha, beta, u_alice, u_bob)
        m[0, 0] = c.population_00
        m[1, 1] = c.population_01
        m[2, 2] = c.population_10
        m[3, 3] = c.population_11
        m[0, 3] = c.coherence
        m[3, 0] = np.conj(c.coherence)
    else:
        raise ValueError(f"unknown family {family!r}")
    return DensityMatrix(REGION_I_LAYOUT, m)


def negativity(rho: DensityMatrix, subsystem: Iterable[str]) -> float:
    """Trace norm of the partial transpose minus one, clamped at zero.

    Zero for separable states, one for a pure two-qubit Bell state.
    """
    value = trace_norm(partial_transpose(rho, subsystem).matrix) - 1.0
    return _clamp_nonnegative(value, "negativity")


def _clamp_nonnegative(value: float, what: str) -> float:
    if value < 0.0:
        if value < -_CLAMP_TOL:
            raise NumericalError(f"{what} is negative beyond rounding: {value!r}")
        return 0.0
    return value


def _sqrt_clamped(value: float, what: str) -> float:
    return math.sqrt(_clamp_nonnegative(value, what))


def negativity_closed_form(family: BellFamily, alpha, beta, u_alice, u_bob) -> float:
    """Negativity from the explicit eigenvalue list of the partial transpose.

    The squared eigenvalues are, with populations p and coherence c of
    :func:`reduced_rho`:

    PSI family:  p01^2,  p10^2,  (2|c|^2 + p11^2 +- p11 sqrt(p11^2 + 4|c|^2)) / 2
    PHI family:  p00^2,  p11^2,  (p01^2 + p10^2 + 2|c|^2
                  +- sqrt((p01^2 - p10^2)^2 + 4 (p01 + p10)^2 |c|^2)) / 2
    """
    if family is BellFamily.PSI:
        c = psi_coefficients(alpha, beta, u_alice, u_bob)
        coh2 = abs(c.coherence) ** 2
        radicand = c.population_11**2 + 4.0 * coh2
        root = c.population_11 * _sqrt_clamped(radicand, "eigenvalue radicand")
        squared = [
            c.population_01**2,
            c.population_10**2,
            (2.0 * coh2 + c.population_11**2 + root) / 2.0,
            (2.0 * coh2 + c.population_11**2 - root) / 2.0,
        ]
    elif family is BellFamily.PHI:
        c = phi_coefficients(alpha, beta, u_alice, u_bob)
        coh2 = abs(c.coherence) ** 2
        radicand = (c.population_01**2 - c.population_10**2) ** 2 + 4.0 * (
            c.population_01 + c.population_10
        ) ** 2 * coh2
        root = _sqrt_clamped(radicand, "eigenvalue radicand")
        base = c.population_01**2 + c.population_10**2 + 2.0 * coh2
        squared = [
            c.population_00**2,
            c.population_11**2,
            (base + root) / 2.0,
            (base - root) / 2.0,
        ]
    else:
        raise ValueError(f"unknown family {family!r}")
    total = sum(_sqrt_clamped(sq, "squared eigenvalue") for sq in squared)
    return _clamp_nonnegative(total - 1.0, "negativity")


class AccelerationLimit(Enum):
    """Which observers are taken to infinite acceleration."""

    BOB_INFINITE = "bob"  # Alice inertial (u_a = 0), Bob at u_b = pi/4
    BOTH_INFINITE = "both"  # u_a = u_b = pi/4


def negativity_limit(family: BellFamily, alpha, beta, limit: AccelerationLimit) -> float:
    """Closed-form limiting negativity at infinite acceleration(s).

    Equals :func:`negativity_closed_form` evaluated at (0, pi/4) for
    ``BOB_INFINITE`` and at (pi/4, pi/4) for ``BOTH_INFINITE``.
    """
    check_pair_normalized(alpha, beta)
    a = abs(alpha) ** 2
    b = abs(beta) ** 2
    if family is BellFamily.PSI:
        if limit is AccelerationLimit.BOB_INFINITE:
            value = a + b / 2.0 + math.sqrt(8.0 * a * b + b * b) / 2.0 - 1.0
        else:
            value = (math.sqrt(1.0 + 4.0 * a * b) - 1.0) / 2.0
    elif family is BellFamily.PHI:
        if limit is AccelerationLimit.BOB_INFINITE:
            value = a / 2.0 + b + math.sqrt(a * a + 8.0 * a * b) / 2.0 - 1.0
        else:
            value = (
                a / 2.0
                + b
                + math.sqrt(a * a / 2.0 + 2.0 * a * b + abs(a * a / 2.0 - 2.0 * a * b)) / 2.0
                - 1.0
            )
    else:
        raise ValueError(f"unknown family {family!r}")
    return _clamp_nonnegative(value, "limiting negativity")
