"""Exact Foldy-Wouthuysen block diagonalization toolkit.

Subpackages:

* ``coeffs``     -- integer coefficient sequences and their identities
* ``algebra``    -- normal-form noncommutative operator algebra
* ``kutzelnigg`` -- order-by-order series for the block-diagonalizing
                    generator and the transformed Hamiltonians
* ``closedform`` -- resummed relativistic Hamiltonians and the classical
                    orbital + spin Hamiltonian
* ``matrixlab``  -- exactly solvable special cases on small complex matrices
* ``cli``        -- batch verification front-end
"""

from .rational import GaussianRational

__all__ = ["GaussianRational"]
__version__ = "0.1.0"
