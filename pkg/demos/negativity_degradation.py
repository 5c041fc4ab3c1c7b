"""How acceleration degrades the entanglement of a Dirac-mode pair.

Walks the full pipeline for both entangled families: map accelerations to
the mixing angle u, expand the pair into Rindler modes, trace out the
hidden region, and measure what is left with the negativity — once through
the generic partial-transpose numerics and once through the closed-form
eigenvalue lists. Saves a surface plot to ``negativity_surfaces.png``.
"""

import math

import numpy as np

from rindlerqi import (
    U_INFINITE,
    AccelerationLimit,
    BellFamily,
    expand_two_mode,
    negativity,
    negativity_closed_form,
    negativity_limit,
    partial_trace,
    reduced_rho,
    u_from_ratio,
)

SQRT_HALF = 1 / math.sqrt(2)

# ---------------------------------------------------------------------------
# 1. From physical acceleration to the mixing angle u.
#
# The only thing a uniformly accelerated observer's detector cares about is
# the ratio omega/a of mode frequency to proper acceleration. Small ratios
# (huge accelerations) push u toward pi/4; large ratios are effectively
# inertial.

print("frequency ratio omega/a  ->  u")
for ratio in (0.0, 0.05, 0.175, 0.5, 2.0):
    print(f"  {ratio:5.3f}  ->  {u_from_ratio(ratio):.4f}  (pi/4 = {U_INFINITE:.4f})")

# ---------------------------------------------------------------------------
# 2. What the accelerated observers actually share.
#
# Take the equal-weight |01>+|10> pair. Expanding in Rindler modes spreads
# it over four occupation patterns; the region-II amplitudes are the part
# neither observer can see.

ket = expand_two_mode(BellFamily.PSI, SQRT_HALF, SQRT_HALF, 0.3, 0.6)
print("\nRindler expansion of the psi pair at (u_a, u_b) = (0.3, 0.6):")
for idx in sorted(ket.amplitudes):
    bits = "".join(str(b) for b in ket.layout.bits_of(idx))
    print(f"  |{bits[:2]}>_I |{bits[2:]}>_II   amplitude {ket.amplitudes[idx]:+.4f}")

rho = partial_trace(ket, keep=("A_I", "B_I"))
print("reduced state trace:", round(rho.trace(), 12))

# ---------------------------------------------------------------------------
# 3. Negativity surfaces over the full acceleration square.
#
# Both routes agree to 1e-10 everywhere; the closed form is what we plot.

grid = np.linspace(0.0, U_INFINITE, 65)
surfaces = {}
for family in BellFamily:
    surface = np.array(
        [
            [negativity_closed_form(family, SQRT_HALF, SQRT_HALF, ua, ub) for ub in grid]
            for ua in grid
        ]
    )
    surfaces[family] = surface
    spot = negativity(reduced_rho(family, SQRT_HALF, SQRT_HALF, 0.3, 0.6), ("B_I",))
    closed = negativity_closed_form(family, SQRT_HALF, SQRT_HALF, 0.3, 0.6)
    print(f"\n{family.value} family: N(0.3, 0.6) = {closed:.6f} "
          f"(generic route: {spot:.6f})")
    print(f"  corner (0, 0):        {surface[0, 0]:.6f}")
    print(f"  corner (0, pi/4):     {surface[0, -1]:.6f}")
    print(f"  corner (pi/4, pi/4):  {surface[-1, -1]:.6f}")

# ---------------------------------------------------------------------------
# 4. The limits, straight from the limit formulas.

print("\ninfinite-acceleration limits at equal weights:")
for family in BellFamily:
    bob = negativity_limit(family, SQRT_HALF, SQRT_HALF, AccelerationLimit.BOB_INFINITE)
    both = negativity_limit(family, SQRT_HALF, SQRT_HALF, AccelerationLimit.BOTH_INFINITE)
    print(f"  {family.value}: Bob infinite -> {bob:.6f}, both infinite -> {both:.6f}")

# A fermionic signature: the psi pair keeps entanglement no matter what.
# The phi pair is less robust — make it lopsided enough and the residual
# entanglement at infinite accelerations vanishes entirely.

print("\nresidual entanglement of the phi family, both observers at pi/4:")
for alpha in (SQRT_HALF, 0.8, 0.9, 0.96):
    beta = math.sqrt(1 - alpha**2)
    both = negativity_closed_form(BellFamily.PHI, alpha, beta, U_INFINITE, U_INFINITE)
    print(f"  |alpha| = {alpha:.3f}: N = {both:.6f}")

# ---------------------------------------------------------------------------
# 5. Plot both surfaces.

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

fig, axes = plt.subplots(1, 2, figsize=(11, 4.2), sharey=True)
for ax, family in zip(axes, BellFamily):
    image = ax.contourf(grid, grid, surfaces[family].T, levels=21, cmap="viridis")
    ax.set_xlabel("u_a")
    ax.set_title(f"negativity, {family.value} family, equal weights")
    fig.colorbar(image, ax=ax)
axes[0].set_ylabel("u_b")
fig.tight_layout()
fig.savefig("negativity_surfaces.png", dpi=150)
print("\nwrote negativity_surfaces.png")
