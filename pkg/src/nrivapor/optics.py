"""Macroscopic optical response from the steady-state coherences.

rho_32 drives the electric dipole and rho_21 the magnetic dipole of
the probe transition; Clausius-Mossotti local-field corrections map
the microscopic polarizabilities to eps_r and mu_r, and the index is
taken on the left-handed branch n = -sqrt(eps_r * mu_r) where both
real parts are negative.
"""

from dataclasses import dataclass

import numpy as np

from .dynamics import build_liouvillian, idx, steady_state
from .errors import ClausiusMossottiPole, ZeroProbe
from .params import C, EPS0, HBAR, MU0, SystemParams

CM_POLE_TOL = 1e-12
GAIN_ABS_TOL = 1e-6


@dataclass(frozen=True)
class OpticalResponse:
    """Complex response of the vapor at one probe detuning."""

    gamma_e: complex  # electric polarizability, m^3
    gamma_m: complex  # magnetic polarizability, m^3
    eps_r: complex
    mu_r: complex
    n: complex
    left_handed: bool
    gain_flag: bool


def electric_polarizability(rho32: complex, params: SystemParams) -> complex:
    """gamma_e = 2 d23^2 rho32 / (eps0 hbar Omega_p), Omega_p in s^-1."""
    if params.omega_p <= 0:
        raise ZeroProbe("electric polarizability undefined for omega_p = 0")
    omega_p_abs = params.omega_p * params.gamma
    return 2.0 * params.d23**2 * rho32 / (EPS0 * HBAR * omega_p_abs)


def magnetic_polarizability(rho21: complex, params: SystemParams) -> complex:
    """gamma_m = 2 mu0 mu12 rho21 / B_p with B_p = E_p / c = hbar Omega_p / (c d23)."""
    if params.omega_p <= 0:
        raise ZeroProbe("magnetic polarizability undefined for omega_p = 0")
    omega_p_abs = params.omega_p * params.gamma
    return 2.0 * MU0 * params.mu12 * rho21 * C * params.d23 / (HBAR * omega_p_abs)


def permittivity(gamma_e: complex, number_density: float) -> complex:
    """eps_r = 1 + N*gamma_e / (1 - N*gamma_e/3) (Clausius-Mossotti)."""
    x = number_density * gamma_e
    denom = 1.0 - x / 3.0
    if abs(denom) <= CM_POLE_TOL:
        raise ClausiusMossottiPole(
            f"electric Clausius-Mossotti pole at N*gamma_e = {x}"
        )
    return 1.0 + x / denom


def permeability(gamma_m: complex, number_density: float) -> complex:
    """mu_r = (1 + 2/3 N*gamma_m) / (1 - 1/3 N*gamma_m)."""
    x = number_density * gamma_m
    denom = 1.0 - x / 3.0
    if abs(denom) <= CM_POLE_TOL:
        raise ClausiusMossottiPole(
            f"magnetic Clausius-Mossotti pole at N*gamma_m = {x}"
        )
    return (1.0 + 2.0 * x / 3.0) / denom


def refractive_index(eps_r: complex, mu_r: complex) -> complex:
    """Principal sqrt of eps_r*mu_r, negated on the left-handed branch."""
    r = np.sqrt(complex(eps_r) * complex(mu_r))  # principal: Re r >= 0
    if eps_r.real < 0 and mu_r.real < 0:
        return -r
    return complex(r)


def response_from_state(rho: np.ndarray, params: SystemParams) -> OpticalResponse:
    """Optical response given an already-computed steady state."""
    rho32 = complex(rho.reshape(16)[idx(3, 2)])
    rho21 = complex(rho.reshape(16)[idx(2, 1)])
    ge = electric_polarizability(rho32, params)
    gm = magnetic_polarizability(rho21, params)
    eps_r = permittivity(ge, params.number_density)
    mu_r = permeability(gm, params.number_density)
    n = refractive_index(eps_r, mu_r)
    return OpticalResponse(
        gamma_e=ge,
        gamma_m=gm,
        eps_r=eps_r,
        mu_r=mu_r,
        n=n,
        left_handed=bool(eps_r.real < 0 and mu_r.real < 0),
        gain_flag=bool(n.imag < -GAIN_ABS_TOL),
    )


def response_at(params: SystemParams) -> OpticalResponse:
    """Full pipeline: Liouvillian -> steady state -> optical response."""
    rho = steady_state(build_liouvillian(params))
    return response_from_state(rho, params)
