# # From one slit to a grating
#
# N copies of a slit state, spaced d apart, have a momentum image equal to
# the single-slit image times an array sum. The single slit sets the
# envelope; the spacing sets the fine fringes.

# %%

import math

import numpy as np

from slitlab import (ApertureState, MultiSlitState, SlitGeometry, analytic_amplitude,
                     array_factor, compose_momentum_amplitude, direct_multislit_phi)

geometry = SlitGeometry()
well = ApertureState.well(geometry)

# %% [markdown]
# The factorized amplitude agrees with a direct Fourier quadrature of the
# sampled multi-slit wavefunction.

# %%

p = np.linspace(-30, 30, 1201)
for count in (2, 3, 5):
    multi = MultiSlitState(well, count, 3.0)
    dev = np.max(np.abs(compose_momentum_amplitude(multi)(p) - direct_multislit_phi(multi, p)))
    print(f"N = {count}: max deviation {dev:.1e}")

# %% [markdown]
# Principal maxima of the array factor reach N; in between there are N - 2
# subsidiary maxima.

# %%

d = 3.0
for count in (2, 3, 5):
    peaks = array_factor(2 * math.pi * np.arange(3) / d, count, d)
    print(f"N = {count}: array factor at principal maxima {np.round(peaks, 12)}")

# %% [markdown]
# The well envelope is wider in the middle (first zero at 3π rather than
# 2π), so the low orders come out stronger. Further out it decays faster
# than the boxcar envelope and the high orders fade.

# %%

for name, base in (("boxcar", ApertureState.boxcar(geometry)), ("well", well)):
    amp = compose_momentum_amplitude(MultiSlitState(base, 4, d))
    orders = 2 * math.pi * np.arange(7) / d
    print(f"{name:6s} order intensities:", np.round(amp.intensity(orders) / amp.intensity(0.0), 5))
