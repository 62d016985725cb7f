"""The transformed Hamiltonian reproduces classical spinning-particle physics.

At linear order in the fields, the 2x2 upper-block Hamiltonian has the form
orbital * 1 - sigma . W.  Its two eigenvalues must equal the classical
orbital-plus-spin Hamiltonian evaluated at spin +-hbar/2 along the
quantization direction: the magnetic moment, the longitudinal pull-back, and
the motional spin-orbit field all carry the same velocity-dependent factors
as the classical precession equation.  The antiparticle block follows from
the charge-conjugation replacement.
"""

import numpy as np

from fwblock import kutzelnigg as ktz
from fwblock.closedform import (
    FieldPoint,
    PhysicalParams,
    calHFW_closed,
    classical_H,
    spin_splitting,
)

PARAMS = PhysicalParams(m=1.0, c=1.0, q=0.7, hbar=1.0, mu_prime=8e-4)


def main():
    rng = np.random.default_rng(5)
    print("quantum eigenvalues vs classical Hamiltonian at s = +-(hbar/2) n")
    print("  |pi|/mc     E_minus          classical        |diff|")
    worst = 0.0
    for ratio in (0.1, 0.4, 0.7, 0.95):
        pi = ratio * rng.normal(size=3)
        pi *= ratio * PARAMS.m * PARAMS.c / np.linalg.norm(pi)
        point = FieldPoint(
            pi=tuple(pi),
            E=tuple(rng.uniform(-1e-3, 1e-3, 3)),
            B=tuple(rng.uniform(-1e-3, 1e-3, 3)),
            phi=0.02,
        )
        eigs = np.linalg.eigvalsh(calHFW_closed(PARAMS, point))
        n_hat, _ = spin_splitting(PARAMS, point)
        classical = classical_H(PARAMS, point, PARAMS.hbar / 2 * n_hat)
        diff = abs(eigs[0] - classical)
        worst = max(worst, diff)
        print(f"   {ratio:4.2f}   {eigs[0]:+.12f}  {classical:+.12f}  {diff:.2e}")
    print(f"  worst absolute difference: {worst:.2e}")
    print()

    print("500-point random check:")
    worst = 0.0
    for _ in range(500):
        point = FieldPoint(
            pi=tuple(rng.uniform(-0.9, 0.9, 3)),
            E=tuple(rng.uniform(-1e-3, 1e-3, 3)),
            B=tuple(rng.uniform(-1e-3, 1e-3, 3)),
            phi=float(rng.uniform(-0.2, 0.2)),
        )
        eigs = np.linalg.eigvalsh(calHFW_closed(PARAMS, point))
        n_hat, _ = spin_splitting(PARAMS, point)
        spin = PARAMS.hbar / 2 * n_hat
        worst = max(
            worst,
            abs(eigs[0] - classical_H(PARAMS, point, spin)),
            abs(eigs[1] - classical_H(PARAMS, point, -spin)),
        )
    print(f"  worst |quantum - classical| over 500 samples: {worst:.2e}")
    print()

    print("antiparticle block via the formal replacement rule:")
    cal = ktz.assemble_calHFW(20)
    bar = ktz.lower_block(20)
    mirrored = ktz.charge_conjugated(cal)
    same = all(bar.orders[n] == mirrored.orders[n] for n in range(21))
    print(f"  direct assembly == conjugated upper block, orders 0..20: {same}")


if __name__ == "__main__":
    main()
