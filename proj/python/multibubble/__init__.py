"""Reduced-energy landscape of multi-bubble configurations on the unit ball.

Thin Python surface over the C++ core: dimension constants, the ball Green
function and ring interaction coefficients, the reduced functions f2..f5 with
their stationary profiles, critical-point search, claim verification, and
bubble-field assembly.
"""

from ._core import (  # noqa: F401
    MultibubbleError,
    alpha1_iota2,
    assemble_field,
    bubble_U,
    bubble_V,
    bubble_amplitudes,
    bubble_integrals,
    constants,
    critical_points,
    f5_hessian_det_sign,
    f_eval,
    find_tstars,
    green,
    hardy_exponents,
    interaction_coeffs,
    iota1,
    iota1_sign,
    iota3,
    iota_ring,
    lambda_profile_f5,
    mu_bar,
    nu1,
    nu2_iota3,
    psi,
    psi_tilde,
    regular_part,
    ring_coeff,
    ring_points,
    ring_profile,
    two_star,
    verify_claim,
)

__all__ = [
    "MultibubbleError",
    "alpha1_iota2",
    "assemble_field",
    "bubble_U",
    "bubble_V",
    "bubble_amplitudes",
    "bubble_integrals",
    "constants",
    "critical_points",
    "f5_hessian_det_sign",
    "f_eval",
    "find_tstars",
    "green",
    "hardy_exponents",
    "interaction_coeffs",
    "iota1",
    "iota1_sign",
    "iota3",
    "iota_ring",
    "lambda_profile_f5",
    "mu_bar",
    "nu1",
    "nu2_iota3",
    "psi",
    "psi_tilde",
    "regular_part",
    "ring_coeff",
    "ring_points",
    "ring_profile",
    "two_star",
    "verify_claim",
]

__version__ = "0.1.0"
