"""Resummed relativistic Hamiltonians and their classical counterpart.

Everything here is numeric.  The closed forms evaluate the Lorentz factor

    gamma_pi = sqrt(1 + (pi / m c)^2)

directly rather than through its series, so they stay valid for arbitrarily
large momentum; the power-series route only converges for |pi| < m c.  All
spin-field couplings are exact at linear order in the fields, which is the
regime in which these expressions hold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


def sigma_dot(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v[0] * SIGMA_X + v[1] * SIGMA_Y + v[2] * SIGMA_Z


@dataclass(frozen=True)
class PhysicalParams:
    """Numeric particle constants.

    ``mu_prime`` is the anomalous magnetic moment; the derived
    ``gamma_m_prime = 2 mu_prime / hbar`` is the anomalous gyromagnetic ratio.
    """

    m: float
    c: float = 1.0
    q: float = 0.0
    hbar: float = 1.0
    mu_prime: float = 0.0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("mass must be nonnegative")
        if self.c <= 0 or self.hbar <= 0:
            raise ValueError("c and hbar must be positive")

    @property
    def gamma_m_prime(self) -> float:
        return 2.0 * self.mu_prime / self.hbar

    def units(self) -> dict:
        """Unit map for evaluating graded polynomials (``mu`` is ``c mu'``)."""
        return {
            "m": self.m,
            "c": self.c,
            "hbar": self.hbar,
            "q": self.q,
            "mu": self.c * self.mu_prime,
        }


@dataclass(frozen=True)
class FieldPoint:
    """Evaluation point: kinematic momentum, fields, and potential value."""

    pi: tuple
    E: tuple = (0.0, 0.0, 0.0)
    B: tuple = (0.0, 0.0, 0.0)
    phi: float = 0.0

    def vectors(self):
        return (
            np.asarray(self.pi, dtype=float),
            np.asarray(self.E, dtype=float),
            np.asarray(self.B, dtype=float),
        )


def gamma_pi(params: PhysicalParams, pi) -> float:
    """Lorentz factor of the kinematic momentum; undefined for m = 0."""
    if params.m == 0:
        raise ValueError("the Lorentz factor is undefined at zero mass")
    pi = np.asarray(pi, dtype=float)
    x = pi / (params.m * params.c)
    return math.sqrt(1.0 + float(x @ x))


def orbital_H(params: PhysicalParams, point: FieldPoint) -> float:
    pi, _, _ = point.vectors()
    return math.sqrt(
        params.m**2 * params.c**4 + params.c**2 * float(pi @ pi)
    ) + params.q * point.phi


def classical_H(params: PhysicalParams, point: FieldPoint, spin) -> float:
    """Orbital plus spin-precession Hamiltonian for a classical spinning charge.

    ``spin`` is the spin vector, required to have magnitude ``hbar/2``.  The
    spin part is the precession Hamiltonian ``-s . Omega`` with the standard
    velocity-dependent coefficients for the magnetic, longitudinal magnetic,
    and motional-electric couplings.
    """
    if params.m <= 0:
        raise ValueError("classical evaluation requires m > 0")
    pi, E, B = point.vectors()
    s = np.asarray(spin, dtype=float)
    if abs(float(np.linalg.norm(s)) - params.hbar / 2) > 1e-9 * params.hbar:
        raise ValueError("classical spin vector must have magnitude hbar/2")
    g = gamma_pi(params, pi)
    mc = params.m * params.c
    gp = params.gamma_m_prime
    q_over_mc = params.q / mc
    pi_hat = pi / mc
    omega = (
        (gp + q_over_mc / g) * B
        - gp / (g * (1.0 + g)) * float(pi_hat @ B) * pi_hat
        - (gp / g + q_over_mc / (g * (1.0 + g))) * np.cross(pi_hat, E)
    )
    return orbital_H(params, point) - float(s @ omega)


def HFW_closed(params: PhysicalParams, point: FieldPoint) -> np.ndarray:
    """Resummed upper-block Hamiltonian of the charged spinor (2x2 Hermitian)."""
    if params.m <= 0:
        raise ValueError("the closed form requires m > 0")
    pi, E, B = point.vectors()
    g = gamma_pi(params, pi)
    mc = params.m * params.c
    moment = params.q * params.hbar / (2.0 * mc)
    out = orbital_H(params, point) * IDENTITY_2
    out = out - moment / g * sigma_dot(B)
    out = out + moment * (1.0 / g - 1.0 / (1.0 + g)) * sigma_dot(np.cross(pi / mc, E))
    return out


def calHFW_closed(params: PhysicalParams, point: FieldPoint) -> np.ndarray:
    """Resummed upper-block Hamiltonian including the anomalous moment."""
    if params.m <= 0:
        raise ValueError("the closed form requires m > 0")
    pi, E, B = point.vectors()
    g = gamma_pi(params, pi)
    mc = params.m * params.c
    mu = params.mu_prime
    moment = params.q * params.hbar / (2.0 * mc)
    pi_hat = pi / mc
    spin_vector = (
        (mu + moment / g) * B
        - mu / (g * (1.0 + g)) * float(pi_hat @ B) * pi_hat
        - (mu / g + moment / (g * (1.0 + g))) * np.cross(pi_hat, E)
    )
    return orbital_H(params, point) * IDENTITY_2 - sigma_dot(spin_vector)


def spin_splitting(params: PhysicalParams, point: FieldPoint):
    """Spin quantization direction and magnitude of the 2x2 closed form.

    Returns ``(n_hat, w)`` such that ``calHFW_closed = orbital * I - w (s.n_hat)``
    in Pauli-matrix form; ``n_hat`` is None when the spin part vanishes.
    """
    matrix = calHFW_closed(params, point) - orbital_H(params, point) * IDENTITY_2
    # matrix = -sigma . w, so w = (-Re m01, +Im m01, -Re m00)
    w = np.array(
        [
            -matrix[0, 1].real,
            matrix[0, 1].imag,
            -matrix[0, 0].real,
        ]
    )
    norm = float(np.linalg.norm(w))
    if norm == 0.0:
        return None, 0.0
    return w / norm, norm


def conjectured_inhomogeneous_report(
    params: PhysicalParams, point: FieldPoint, div_E: float
) -> dict:
    """Report-only evaluation of the conjectured inhomogeneous-field term.

    The conjectured extension adds a zitterbewegung (Darwin) contribution
    ``(hbar^2 / 4 m c)(q / 2 m c - gamma'_m)(div E) / gamma_pi`` plus
    symmetrized operator orderings.  Neither is verified by this package; the
    value is emitted for inspection only and never asserted anywhere.
    """
    pi, _, _ = point.vectors()
    g = gamma_pi(params, pi)
    darwin = (
        params.hbar**2
        / (4.0 * params.m * params.c)
        * (params.q / (2.0 * params.m * params.c) - params.gamma_m_prime)
        * div_E
        / g
    )
    return {
        "status": "conjecture, not verified",
        "darwin_term": darwin,
        "div_E": div_E,
        "note": "valid only as a labeled report value; homogeneous-field "
        "results in this package set div E = 0",
    }
