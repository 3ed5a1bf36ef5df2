"""Matter-wave slit diffraction in momentum space.

Boxcar and infinite-well aperture states, their momentum images, moment and
divergence analysis, the classical Fraunhofer correspondence and N-slit
composition.
"""

__version__ = "0.1.0"

from .aperture import (ApertureState, SlitGeometry, StateKind, Transmission, evaluate_psi,
                       ground_state_energy, transmission_allowed)
from .classical import (ClassicalEstimate, ClassicalSetup, ParaxialWarning,
                        classical_uncertainty_estimate, first_minimum_angle,
                        fraunhofer_amplitude, substitute_momentum_form)
from .errors import (ConfigError, ContractError, DomainError, GeometryError, NoMinimumError,
                     OverlapError, SlitlabError)
from .multislit import (MultiSlitState, array_factor, array_sum, compose_momentum_amplitude,
                        direct_multislit_phi)
from .transform import (AmplitudeSource, MomentumAmplitude, PatternProfile, analytic_amplitude,
                        analytic_boxcar_phi, analytic_well_ground_phi, analytic_well_phi,
                        default_momentum_grid, intensity_profile, numeric_phi)
from .uncertainty import (CutoffScan, MomentStats, MomentumMoments, Verdict, cutoff_scan, first_pattern_minimum,
                          momentum_moments, parseval_norm, position_moments, side_lobe_ratio,
                          uncertainty_report)
