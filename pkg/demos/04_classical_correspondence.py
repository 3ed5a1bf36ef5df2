# # Fraunhofer optics in momentum language
#
# The textbook single-slit amplitude sin(πa sinθ/λ)/(πa sinθ/λ) turns into
# the boxcar momentum image once λ = h/p and p_y = p sinθ. This checks the
# substitution numerically and compares the order-of-magnitude classical
# estimate δyδp = h with the quantum product.

# %%

import math

import numpy as np

from slitlab import (ApertureState, ClassicalSetup, SlitGeometry, analytic_amplitude,
                     classical_uncertainty_estimate, first_minimum_angle, fraunhofer_amplitude,
                     substitute_momentum_form, uncertainty_report)

rng = np.random.default_rng(7)
worst = 0.0
for a, p, theta in zip(rng.uniform(0.1, 5, 2000), rng.uniform(5, 300, 2000), rng.uniform(-0.2, 0.2, 2000)):
    g = SlitGeometry(width=a, momentum=p)
    diff = abs(substitute_momentum_form(g, theta) - fraunhofer_amplitude(ClassicalSetup(g.wavelength, a, theta)))
    worst = max(worst, diff)
print(f"largest difference over 2000 random setups: {worst:.1e}")

# %% [markdown]
# The first dark fringe in angle lands exactly on the first zero of the
# boxcar momentum image.

# %%

g = SlitGeometry(width=1.0, momentum=20 * math.pi)
theta0 = first_minimum_angle(g.wavelength, g.width)
p_y = g.momentum * math.sin(theta0)
print(f"θ_min = {theta0:.6f} rad -> p_y = {p_y / math.pi:.12f}π,"
      f" |φ_boxcar(p_y)| = {abs(analytic_amplitude(ApertureState.boxcar(g))(p_y)):.1e}")

# %% [markdown]
# The classical δp is the half-width of the central fringe, not a standard
# deviation, so δyδp = h and ΔyΔp ≈ 0.57ħ measure different things.

# %%

est = classical_uncertainty_estimate(g)
q = uncertainty_report(ApertureState.well(g))
print(f"classical δyδp = {est.product:.6f} = {est.product / (2 * math.pi):.3f} h")
print(f"quantum   ΔyΔp = {q.product_dy_dp:.6f} = {q.product_dy_dp / (2 * math.pi):.4f} h")
