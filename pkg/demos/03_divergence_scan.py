# # Does <p²> exist?
#
# The flat slit wavefunction jumps at the jaws, so its momentum image falls
# off only like 1/p and p²|φ|² does not decay at all. Integrating up to a
# cutoff P and watching how the result grows tells the two models apart.

# %%

import math

from slitlab import (ApertureState, SlitGeometry, analytic_amplitude, cutoff_scan,
                     uncertainty_report)

geometry = SlitGeometry()

# %% [markdown]
# For the boxcar the partial moment is (2/π)(P - sin P): a straight line of
# slope 2/π ≈ 0.6366.

# %%

scan = cutoff_scan(analytic_amplitude(ApertureState.boxcar(geometry)))
print("boxcar:", scan.verdict.value, " slope =", round(scan.slope, 8))
for P, m in list(zip(scan.cutoffs, scan.partial_moments))[::4]:
    print(f"  P = {P:12.1f}   <p²>_P = {m:14.4f}   2/π (P - sin P) = {2 / math.pi * (P - math.sin(P)):14.4f}")

# %% [markdown]
# The well state is continuous with a kink at the edges, so the tail of
# p²|φ|² goes like 1/p² and the partial moments settle at (πħ/a)².

# %%

scan = cutoff_scan(analytic_amplitude(ApertureState.well(geometry)))
print("well:", scan.verdict.value, " limit =", scan.limit, " π² =", math.pi ** 2)

# %% [markdown]
# With a finite Δp the product with Δy is well defined and sits above ħ/2.

# %%

for n in (1, 2, 3):
    r = uncertainty_report(ApertureState.well(geometry, n))
    print(f"n = {n}: Δy = {r.delta_y:.6f}  Δp = {r.delta_p:.6f}  ΔyΔp = {r.product_dy_dp:.6f}ħ")
