"""Acceleration parametrization and Rindler-mode expansions of Dirac states.

A uniformly accelerated observer sees each Minkowski mode split into a
region-I fermion mode and a region-II antifermion mode, mixed through an
angle ``u`` set by the ratio of mode frequency to proper acceleration:

    cos u = (exp(-2 pi omega / a) + 1) ** (-1/2),   0 <= u <= pi/4.

``u = 0`` is the inertial limit and ``u = pi/4`` encodes infinite
acceleration. Under the single-mode treatment a Minkowski vacuum mode
expands as ``cos u |00> + sin u |11>`` over (region-I, region-II) and an
occupied mode as ``|10>``; antisymmetrization phases between independent
modes are not tracked, and the Bogoliubov phase is set to zero.
"""

from __future__ import annotations

import math
from enum import Enum

from .states import Ket, ModeLayout

#: acceleration measure encoding the infinite-acceleration limit
U_INFINITE = math.pi / 4

NORMALIZATION_TOL = 1e-12

#: single Minkowski mode: region-I fermion, region-II antifermion
SINGLE_MODE_LAYOUT = ModeLayout(("I", "II"))

#: two Minkowski modes A (Alice) and B (Bob), region-I parts first
TWO_MODE_LAYOUT = ModeLayout(("A_I", "B_I", "A_II", "B_II"))


class BellFamily(Enum):
    """The two families of maximally entangled two-mode states."""

    PSI = "psi"  # alpha|01> + beta|10>
    PHI = "phi"  # alpha|00> + beta|11>


def check_acceleration(u: float, name: str = "u") -> float:
    u = float(u)
    if not 0.0 <= u <= U_INFINITE:
        raise ValueError(f"{name} = {u} outside the allowed range [0, pi/4]")
    return u


def check_pair_normalized(first: complex, second: complex, names: str = "alpha, beta") -> None:
    norm_sq = abs(first) ** 2 + abs(second) ** 2
    if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"({names}) not normalized: |.|^2 sums to {norm_sq!r}")


def u_from_ratio(ratio: float) -> float:
    """Acceleration measure u for a frequency/acceleration ratio omega/a >= 0.

    Monotone decreasing; ratio 0 (infinite acceleration) gives pi/4 and
    large ratios approach the inertial limit u = 0.
    """
    x = float(ratio)
    if x < 0:
        raise ValueError(f"frequency ratio must be nonnegative, got {x}")
    u = math.acos(1.0 / math.sqrt(math.exp(-2.0 * math.pi * x) + 1.0))
    # acos can land one ulp above pi/4 at ratio 0
    return min(u, U_INFINITE)


def ratio_from_u(u: float) -> float:
    """Inverse of :func:`u_from_ratio`; u = 0 maps to an infinite ratio."""
    u = check_acceleration(u)
    if u == 0.0:
        return math.inf
    return -math.log(math.tan(u)) / math.pi


def mode_expansion_terms(occupation: int, u: float) -> list[tuple[int, int, float]]:
    """Rindler terms of one Minkowski mode as (region-I bit, region-II bit, weight)."""
    u = check_acceleration(u)
    if occupation == 0:
        return [(0, 0, math.cos(u)), (1, 1, math.sin(u))]
    if occupation == 1:
        return [(1, 0, 1.0)]
    raise ValueError(f"occupation must be 0 or 1, got {occupation}")


def expand_vacuum(u: float) -> Ket:
    """Minkowski vacuum of one mode: cos u |00> + sin u |11>."""
    terms = {(i, ii): w for i, ii, w in mode_expansion_terms(0, u)}
    return Ket.from_terms(SINGLE_MODE_LAYOUT, terms)


def expand_one_particle(u: float) -> Ket:
    """Minkowski one-fermion state of one mode: |10>, independent of u."""
    terms = {(i, ii): w for i, ii, w in mode_expansion_terms(1, u)}
    return Ket.from_terms(SINGLE_MODE_LAYOUT, terms)


def minkowski_pair_terms(family: BellFamily, alpha: complex, beta: complex) -> list[tuple[int, int, complex]]:
    """Occupation terms (A bit, B bit, coefficient) of the Minkowski two-mode state."""
    if family is BellFamily.PSI:
        return [(0, 1, complex(alpha)), (1, 0, complex(beta))]
    return [(0, 0, complex(alpha)), (1, 1, complex(beta))]


def expand_two_mode(
    family: BellFamily,
    alpha: complex,
    beta: complex,
    u_alice: float,
    u_bob: float,
) -> Ket:
    """Two entangled Minkowski modes in the Rindler basis [A_I, B_I, A_II, B_II].

    For the PSI family (alpha|01> + beta|10>) the result has four terms,

        alpha cos u_a |0100> + alpha sin u_a |1110>
        + beta cos u_b |1000> + beta sin u_b |1101>,

    and for the PHI family (alpha|00> + beta|11>) five terms: the four
    cos/sin products of the doubly expanded vacuum plus beta |1100>.
    """
    check_pair_normalized(alpha, beta)
    ca, sa = math.cos(check_acceleration(u_alice, "u_alice")), math.sin(u_alice)
    cb, sb = math.cos(check_acceleration(u_bob, "u_bob")), math.sin(u_bob)
    if family is BellFamily.PSI:
        terms = {
            "0100": alpha * ca,
            "1110": alpha * sa,
            "1000": beta * cb,
            "1101": beta * sb,
        }
    elif family is BellFamily.PHI:
        terms = {
            "0000": alpha * ca * cb,
            "0101": alpha * ca * sb,
            "1010": alpha * sa * cb,
            "1111": alpha * sa * sb,
            "1100": beta,
        }
    else:
        raise ValueError(f"unknown family {family!r}")
    return Ket.from_terms(TWO_MODE_LAYOUT, terms)
