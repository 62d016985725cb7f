"""Exact block diagonalization of small Dirac/Dirac-Pauli matrices.

Two field configurations admit an exact transformation built from a single
operator ``X``:

* case I  -- charged spinor, magnetostatic field only.  In the symbol model
  ``c (s.pi)`` is any Hermitian 2x2 matrix ``M`` and
  ``X = M (m c^2 + sqrt(m^2 c^4 + M^2))^{-1}``.
* case II -- neutral spinor with anomalous moment, electrostatic field only.
  With ``Omega = c (s.p) + i mu' (s.E)``, the product ``Omega X`` solves a
  scalar-like quadratic equation and ``X = Omega^{-1} (Omega X)``.

Matrix functions here are evaluated by Hermitian eigendecomposition, never by
series; the point of this module is exactness beyond any radius of
convergence.  ``gaussian_invsqrt`` demonstrates the complementary route: the
inverse square root as a Gaussian integral, convergent for every positive
spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .closedform import IDENTITY_2, PhysicalParams, sigma_dot


def hermitian_sqrt(matrix: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix via eigendecomposition."""
    vals, vecs = np.linalg.eigh(matrix)
    if np.min(vals) < -1e-12 * max(1.0, np.max(np.abs(vals))):
        raise ValueError("matrix is not positive semidefinite")
    return (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ vecs.conj().T


def hermitian_inv_sqrt(matrix: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(matrix)
    if np.min(vals) <= 0:
        raise ValueError("matrix is not positive definite")
    return (vecs / np.sqrt(vals)) @ vecs.conj().T


@dataclass(frozen=True)
class BlockResult:
    """Outcome of one exact block-diagonalization run.

    Residuals are Frobenius norms and are always computed, never assumed:
    ``offdiag_norm`` for the off-diagonal blocks of ``U H U^dag`` and
    ``unitarity_residual`` for ``U U^dag - 1``.
    """

    U: np.ndarray
    H: np.ndarray
    upper_block: np.ndarray
    lower_block: np.ndarray
    offdiag_norm: float
    unitarity_residual: float

    @property
    def transformed(self) -> np.ndarray:
        return self.U @ self.H @ self.U.conj().T


def build_dirac_pauli_matrix(
    params: PhysicalParams,
    M: np.ndarray,
    E=(0.0, 0.0, 0.0),
    B=(0.0, 0.0, 0.0),
    phi: float = 0.0,
) -> np.ndarray:
    """Assemble the 4x4 Hamiltonian with a caller-supplied odd block.

    ``M`` is the 2x2 realization of ``c (s.pi)``; the diagonal blocks carry
    ``+-(m c^2 - mu'(s.B)) + q phi`` and the off-diagonal ones
    ``M +- i mu' (s.E)``.
    """
    M = np.asarray(M, dtype=complex)
    if M.shape != (2, 2):
        raise ValueError("M must be 2x2")
    if not np.allclose(M, M.conj().T, atol=1e-12 * max(1.0, np.linalg.norm(M))):
        raise ValueError("M must be Hermitian")
    E = np.asarray(E, dtype=float)
    B = np.asarray(B, dtype=float)
    rest = params.m * params.c**2
    even = params.q * phi * IDENTITY_2
    pauli_B = params.mu_prime * sigma_dot(B)
    odd_shift = 1j * params.mu_prime * sigma_dot(E)
    top = rest * IDENTITY_2 + even - pauli_B
    bottom = -rest * IDENTITY_2 + even + pauli_B
    if not (np.allclose(top, top.conj().T) and np.allclose(bottom, bottom.conj().T)):
        raise ValueError("diagonal blocks must be Hermitian")
    return np.block([[top, M + odd_shift], [(M + odd_shift).conj().T, bottom]])


def _assemble_unitary(X: np.ndarray) -> np.ndarray:
    Y = hermitian_inv_sqrt(IDENTITY_2 + X.conj().T @ X)
    Z = hermitian_inv_sqrt(IDENTITY_2 + X @ X.conj().T)
    return np.block([[Y, Y @ X.conj().T], [-Z @ X, Z]])


def _block_result(U: np.ndarray, H: np.ndarray) -> BlockResult:
    transformed = U @ H @ U.conj().T
    off = np.linalg.norm(transformed[:2, 2:]) ** 2 + np.linalg.norm(transformed[2:, :2]) ** 2
    return BlockResult(
        U=U,
        H=H,
        upper_block=transformed[:2, :2],
        lower_block=transformed[2:, 2:],
        offdiag_norm=float(np.sqrt(off)),
        unitarity_residual=float(np.linalg.norm(U @ U.conj().T - np.eye(4))),
    )


def solve_case1(params: PhysicalParams, M: np.ndarray) -> BlockResult:
    """Exact transformation for a Hermitian odd block and no electric field.

    For ``m > 0`` the resolvent shift ``m c^2 + sqrt(m^2 c^4 + M^2)`` is
    positive definite.  At ``m = 0`` the construction degenerates to the
    matrix sign function of ``M`` (the chirality rotation); a singular ``M``
    leaves the transformation underdetermined and is rejected.
    """
    M = np.asarray(M, dtype=complex)
    if not np.allclose(M, M.conj().T, atol=1e-12 * max(1.0, np.linalg.norm(M))):
        raise ValueError("M must be Hermitian")
    rest = params.m * params.c**2
    root = hermitian_sqrt(rest**2 * IDENTITY_2 + M @ M)
    shift = rest * IDENTITY_2 + root
    if params.m == 0 and np.min(np.linalg.eigvalsh(shift)) <= 1e-14 * np.linalg.norm(M):
        raise ValueError("massless case needs an invertible odd block")
    X = M @ np.linalg.inv(shift)
    U = _assemble_unitary(X)
    H = build_dirac_pauli_matrix(
        PhysicalParams(m=params.m, c=params.c, q=params.q, hbar=params.hbar), M
    )
    return _block_result(U, H)


def solve_case2(params: PhysicalParams, p, E) -> BlockResult:
    """Exact transformation for a neutral anomalous-moment spinor in a static
    electric field.

    ``Omega = c (s.p) + i mu'(s.E)`` must be invertible; the quadratic
    equation is solved for ``Omega X`` first and only then inverted, so a
    singular ``Omega`` is reported as such rather than regularized away.
    """
    if params.q != 0:
        raise ValueError("case II requires a neutral spinor (q = 0)")
    if params.m <= 0:
        raise ValueError("case II requires m > 0")
    p = np.asarray(p, dtype=float)
    E = np.asarray(E, dtype=float)
    omega = params.c * sigma_dot(p) + 1j * params.mu_prime * sigma_dot(E)
    det = np.linalg.det(omega)
    scale = max(1.0, float(np.linalg.norm(omega)) ** 2)
    if abs(det) <= 1e-12 * scale:
        raise ValueError(
            "Omega is singular (|c p| = |mu' E| with p perpendicular to E); "
            "the exact construction does not apply"
        )
    rest = params.m * params.c**2
    omega_x = -rest * IDENTITY_2 + hermitian_sqrt(rest**2 * IDENTITY_2 + omega @ omega.conj().T)
    X = np.linalg.inv(omega) @ omega_x
    U = _assemble_unitary(X)
    rest_block = rest * IDENTITY_2
    H = np.block([[rest_block, omega], [omega.conj().T, -rest_block]])
    return _block_result(U, H)


def case2_closed_form(params: PhysicalParams, p, E) -> np.ndarray:
    """Closed-form upper block for case II with homogeneous field.

    ``sqrt(m^2c^4 + c^2 p^2 + 2 mu' c (p x E).sigma + mu'^2 E^2)``; the
    divergence term is absent because the field is homogeneous.
    """
    p = np.asarray(p, dtype=float)
    E = np.asarray(E, dtype=float)
    inner = (
        (params.m**2 * params.c**4 + params.c**2 * float(p @ p) + params.mu_prime**2 * float(E @ E))
        * IDENTITY_2
        + 2.0 * params.mu_prime * params.c * sigma_dot(np.cross(p, E))
    )
    return hermitian_sqrt(inner)


def massless_weyl_unitary() -> np.ndarray:
    """The zero-mass limit of the case-I transformation for a positive odd
    block: the basis rotation that decouples the two chiralities."""
    return np.block(
        [[IDENTITY_2, IDENTITY_2], [-IDENTITY_2, IDENTITY_2]]
    ) / np.sqrt(2.0)


def gaussian_invsqrt(A: np.ndarray, n_eta: int = 2001, eta_max: float = 8.0) -> np.ndarray:
    """Quadrature of ``(1+A)^{-1/2} = int d_eta exp(-pi eta^2 (1+A))``.

    Valid for any Hermitian ``A`` with ``1 + A`` positive definite, including
    spectra far outside the unit ball where the binomial series diverges.  The
    integrand is evaluated with a Pade matrix exponential, so the result is
    independent of the spectral route it is checked against.
    """
    A = np.asarray(A, dtype=complex)
    dim = A.shape[0]
    one_plus = np.eye(dim) + A
    if np.min(np.linalg.eigvalsh((one_plus + one_plus.conj().T) / 2)) <= 0:
        raise ValueError("1 + A must be positive definite")
    if n_eta < 2:
        raise ValueError("need at least two quadrature nodes")
    etas, step = np.linspace(-eta_max, eta_max, n_eta, retstep=True)
    total = np.zeros_like(one_plus)
    for eta in etas:
        total = total + expm(-np.pi * eta**2 * one_plus)
    return total * step


def series_vs_closed_sweep(
    params: PhysicalParams,
    ratios,
    orders=(10, 20, 30),
    E=(0.0, 0.0, 0.0),
    B=(0.0, 0.0, 0.0),
    direction=(0.0, 0.0, 1.0),
) -> list[dict]:
    """Partial-sum error of the resummed Hamiltonian over a momentum grid.

    For each ``|pi| / m c`` ratio, evaluates the series through the requested
    orders against the closed form and reports relative errors; inside the
    unit ball the error decays geometrically with ratio ``x^2``, outside the
    partial sums run away while the closed form stays finite.
    """
    from . import kutzelnigg
    from .closedform import FieldPoint, calHFW_closed

    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    series = kutzelnigg.assemble_calHFW(max(orders))
    units = params.units()
    rows = []
    for ratio in ratios:
        pi = ratio * params.m * params.c * direction
        point = FieldPoint(pi=tuple(pi), E=tuple(E), B=tuple(B))
        closed = calHFW_closed(params, point)
        scale = float(np.linalg.norm(closed))
        row = {"pi_over_mc": float(ratio)}
        for order in orders:
            partial = kutzelnigg.eval_hamiltonian(
                series, units, pi, point.E, point.B, phi=point.phi, max_order=order
            )
            row[f"rel_err_order_{order}"] = float(np.linalg.norm(partial - closed) / scale)
        rows.append(row)
    return rows
