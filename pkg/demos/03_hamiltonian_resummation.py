"""Assemble the transformed Hamiltonian and resum it against the closed form.

The upper-block Hamiltonian comes out order by order with an exactly
vanishing antihermitian part; the surviving families resum to square-root
closed forms in the kinematic momentum.  The series converges only for
|pi| < m c, while the closed forms -- backed by the Gaussian-integral
representation of the inverse square root -- remain valid far beyond.
"""

import numpy as np

from fwblock import kutzelnigg as ktz
from fwblock.algebra import render
from fwblock.closedform import FieldPoint, PhysicalParams, calHFW_closed

PARAMS = PhysicalParams(m=1.0, c=1.0, q=0.7, hbar=1.0, mu_prime=8e-4)


def main():
    top = 40
    series = ktz.assemble_calHFW(top)
    print("leading per-order contributions (beyond m c^2 + q phi):")
    for n in range(0, 7):
        poly = series.orders[n]
        if poly:
            print(f"  order {n}: {render(poly)}")
    print()

    bad = [n for n in range(top + 1) if series.orders[n].antihermitian_part()]
    print(f"antihermitian part through order {top}: {'all zero' if not bad else bad}")
    print()

    units = PARAMS.units()
    rng = np.random.default_rng(42)
    E = rng.uniform(-1e-3, 1e-3, 3)
    B = rng.uniform(-1e-3, 1e-3, 3)
    direction = np.array([0.3, -0.5, 0.81])
    direction /= np.linalg.norm(direction)

    print("partial sums vs closed form (relative Frobenius error):")
    header = "  |pi|/mc   " + "".join(f"order {o:2d}      " for o in (10, 20, 30, 40))
    print(header)
    for ratio in (0.2, 0.6, 0.95, 1.2):
        pi = ratio * PARAMS.m * PARAMS.c * direction
        closed = calHFW_closed(PARAMS, FieldPoint(pi=tuple(pi), E=tuple(E), B=tuple(B)))
        errs = []
        for order in (10, 20, 30, 40):
            partial = ktz.eval_hamiltonian(series, units, pi, E, B, max_order=order)
            errs.append(np.linalg.norm(partial - closed) / np.linalg.norm(closed))
        print(f"    {ratio:4.2f}   " + "".join(f"{e:13.3e}" for e in errs))
    print()
    print("inside the unit ball the error decays like (|pi|/mc)^(2n);")
    print("outside it the partial sums diverge while the closed form is finite.")


if __name__ == "__main__":
    main()
