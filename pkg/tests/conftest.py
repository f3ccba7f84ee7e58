"""Shared fixtures and independent numerical oracles for the test suite."""

import math

import pytest

from eprtraj import reduced_action_unwrapped, validate_params

# Reference parameter set used throughout: hbar = m = 1, k = pi/2,
# alpha = 0.5, beta = 0, tau = 0.
REF = dict(hbar=1.0, m=1.0, alpha=0.5, beta=0.0, k=math.pi / 2)


@pytest.fixture
def ref_params():
    return validate_params(**REF)


def make_params(alpha=0.5, beta=0.0, k=math.pi / 2, hbar=1.0, m=1.0, tau=0.0):
    return validate_params(hbar, m, alpha, beta, k, tau)


def five_point_derivative(f, x, h):
    """Fourth-order central first derivative."""
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def five_point_second(f, x, h):
    """Fourth-order central second derivative."""
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h)
            - f(x - 2 * h)) / (12 * h * h)


def jacobi_time_estimate(x, params, rel=1e-6):
    """Central difference of the unwrapped action along the energy ray.

    The wavenumber is perturbed as k * sqrt(1 +- rel) so the energy moves by
    +-rel relative, and the quotient uses the single-particle energy scale
    E = hbar^2 k^2 / (2 m): that is the normalization under which the
    closed-form motion is the exact energy derivative of the unwrapped
    action (the composite scale M yields (1 + alpha^2) times the motion).
    """
    k0 = params.k
    k_hi = k0 * math.sqrt(1.0 + rel)
    k_lo = k0 * math.sqrt(1.0 - rel)
    p_hi = validate_params(params.hbar, params.m, params.alpha, params.beta, k_hi,
                           params.tau)
    p_lo = validate_params(params.hbar, params.m, params.alpha, params.beta, k_lo,
                           params.tau)
    w_hi = reduced_action_unwrapped(x, p_hi)
    w_lo = reduced_action_unwrapped(x, p_lo)
    de = params.hbar ** 2 * (k_hi ** 2 - k_lo ** 2) / (2.0 * params.m)
    return params.tau + (w_hi - w_lo) / de
