# # Two ways to model a slit
#
# A slit of width a can be represented by a flat wavefunction that is
# constant across the opening, or by the ground state of an infinitely deep
# well that vanishes at the jaws. This walk-through builds both and looks at
# what they imply for position spread and energy.

# %%

import math

import numpy as np

from slitlab import (ApertureState, SlitGeometry, evaluate_psi, ground_state_energy,
                     position_moments, transmission_allowed)

geometry = SlitGeometry(width=1.0, momentum=20 * math.pi)  # ħ = μ = 1
boxcar = ApertureState.boxcar(geometry)
well = ApertureState.well(geometry)

# %% [markdown]
# Sample both states across the opening. The boxcar is 1/√a everywhere on
# the closed interval; the well rises from zero to √(2/a) at the centre.

# %%

y = np.linspace(-0.5, 0.5, 11)
print("   y     boxcar    well")
for yi, b, w in zip(y, evaluate_psi(boxcar, y).real, evaluate_psi(well, y).real):
    print(f"{yi:+.2f}   {b:.4f}   {w:.4f}")

# %% [markdown]
# Position spreads. The well concentrates probability near the middle, so
# its Δy is smaller than the flat 1/√12.

# %%

for name, state in (("boxcar", boxcar), ("well", well)):
    mean, var = position_moments(state)
    print(f"{name:6s}  <y> = {mean:+.3e}   Δy/a = {math.sqrt(var):.6f}")

# %% [markdown]
# Confinement costs energy. The lowest well level sets a threshold on the
# incident momentum below which nothing gets through.

# %%

print("E_1 =", ground_state_energy(geometry, 1), " (π²/2 in these units)")
for p in (1.0, math.pi, 10.0, 20 * math.pi):
    t = transmission_allowed(SlitGeometry(width=1.0, momentum=p))
    print(f"p = {p:8.4f}  allowed={t.allowed!s:5s}  p_z={t.pz}")
