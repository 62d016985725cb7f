"""Two field configurations admit an exact block diagonalization.

Case I: charged spinor in a magnetostatic field -- the generator solves a
quadratic matrix equation in closed form.  Case II: neutral spinor with an
anomalous moment in an electrostatic field.  Both are verified here on
4x4 matrices: the transformation is unitary to machine precision, kills the
off-diagonal blocks, and the upper block matches its closed form.  The zero
mass limit of case I is the chirality basis rotation.
"""

import numpy as np

from fwblock.closedform import PhysicalParams
from fwblock import matrixlab


def main():
    charged = PhysicalParams(m=1.0, c=1.0, q=0.5, hbar=1.0)
    rng = np.random.default_rng(2024)

    print("case I: random Hermitian odd blocks")
    worst = 0.0
    for _ in range(200):
        raw = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        M = rng.uniform(0.2, 3.0) * (raw + raw.conj().T) / 2
        result = matrixlab.solve_case1(charged, M)
        worst = max(worst, result.offdiag_norm / np.linalg.norm(result.H))
    print(f"  200 trials, worst relative off-diagonal residual: {worst:.2e}")
    print()

    print("massless limit (positive-definite block): the chirality rotation")
    massless = matrixlab.solve_case1(
        PhysicalParams(m=0.0, c=1.0), np.array([[2.0, 0.5], [0.5, 1.0]], dtype=complex)
    )
    print(np.array_str(np.real_if_close(np.round(massless.U, 12)), precision=6))
    print()

    neutral = PhysicalParams(m=1.0, c=1.0, q=0.0, hbar=1.0, mu_prime=0.3)
    print("case II: neutral spinor with anomalous moment in an electric field")
    p, E = np.array([0.4, -0.2, 0.3]), np.array([0.5, 0.1, -0.7])
    result = matrixlab.solve_case2(neutral, p, E)
    want = matrixlab.case2_closed_form(neutral, p, E)
    print(f"  off-diagonal residual: {result.offdiag_norm:.2e}")
    print(f"  upper block vs closed form: {np.linalg.norm(result.upper_block - want):.2e}")
    print(f"  unitarity residual: {result.unitarity_residual:.2e}")
    print()

    print("  the construction fails only when Omega is singular, i.e. when")
    print("  |c p| = |mu' E| with p perpendicular to E:")
    try:
        matrixlab.solve_case2(neutral, (neutral.mu_prime, 0, 0), (0, 0, 1.0))
    except ValueError as exc:
        print(f"  -> {exc}")
    print()

    print("Gaussian-integral inverse square root (valid beyond the series radius)")
    A = 3.0 * np.eye(2)
    got = matrixlab.gaussian_invsqrt(A)
    print(f"  (1 + 3)^(-1/2) via quadrature: {got[0, 0].real:.10f}  (exact 0.5)")
    raw = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    A = (raw + raw.conj().T) / 2
    A = A @ A
    err = np.linalg.norm(
        matrixlab.gaussian_invsqrt(A) - matrixlab.hermitian_inv_sqrt(np.eye(2) + A)
    )
    print(f"  random PSD spectrum, quadrature vs spectral: {err:.2e}")


if __name__ == "__main__":
    main()
