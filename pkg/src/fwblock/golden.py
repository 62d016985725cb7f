"""Embedded golden tables for the leading series orders.

The reference values are the published leading-order tables for the
off-diagonal generator series: orders 1..13 of the charged-spinor series
(``X_n``) and orders 3..12 of the anomalous-moment series (``X'_n``).  They
are stored as exact rationals on the three monomial families of each order
and expanded to normal form on demand, so regression comparisons are exact.

One transcription note: the order-11 ``(s.E)`` entry is stored as ``-63/512``.
The printed table value ``-63/1024`` contradicts both the defining recursion
and the general order formula (the family coefficient is ``b_5 = 126``, and
``126/2^10 = 63/512``); the stored value is the self-consistent one.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    Grade,
    OperatorPoly,
    Tail,
    sigma_pi_power,
    term,
)
from .rational import GaussianRational

F = Fraction

#: X_n for odd n: coefficients of (s.pi)^n / m^n,
#: i q hbar pi^{n-3} (s.E) / m^{n-1} and i q hbar pi^{n-5} (s.pi)(E.pi) / m^{n-1}
DIRAC_TABLE: dict[int, tuple[Fraction, Fraction, Fraction]] = {
    1: (F(1, 2), F(0), F(0)),
    3: (F(-1, 8), F(-1, 4), F(0)),
    5: (F(1, 16), F(3, 16), F(1, 8)),
    7: (F(-5, 128), F(-5, 32), F(-3, 16)),
    9: (F(7, 256), F(35, 256), F(29, 128)),
    11: (F(-21, 1024), F(-63, 512), F(-65, 256)),
    13: (F(33, 2048), F(231, 2048), F(281, 1024)),
}

#: X'_n: even orders carry mu'' pi^{n-4} (B.pi) / m^{n-2}; odd orders carry
#: i mu'' pi^{n-3} (s.E) / m^{n-2} and i mu'' pi^{n-5} (s.pi)(E.pi) / m^{n-2}
PAULI_ODD_TABLE: dict[int, tuple[Fraction, Fraction]] = {
    3: (F(-1, 2), F(0)),
    5: (F(3, 8), F(-1, 4)),
    7: (F(-5, 16), F(1, 4)),
    9: (F(35, 128), F(-15, 64)),
    11: (F(-63, 256), F(7, 32)),
}

PAULI_EVEN_TABLE: dict[int, Fraction] = {
    4: F(1, 2),
    6: F(-3, 8),
    8: F(5, 16),
    10: F(-35, 128),
    12: F(63, 256),
}


def golden_dirac(n: int) -> OperatorPoly:
    """Golden ``X_n`` in normal form (zero polynomial for even ``n``)."""
    if n < 1 or n > max(DIRAC_TABLE):
        raise KeyError(f"no golden entry for X_{n}")
    if n % 2 == 0:
        return OperatorPoly()
    spinor, sig_e, sde = DIRAC_TABLE[n]
    poly = sigma_pi_power(n).scale(spinor, Grade(m=-n))
    qh = Grade(m=-(n - 1), hbar=1, q=1)
    if sig_e:
        poly = poly + term(GaussianRational(0, sig_e), Tail.SIGMA_FIELD, "E", (n - 3) // 2, qh)
    if sde:
        poly = poly + term(
            GaussianRational(0, sde), Tail.SIGMA_PI_FIELD_DOT, "E", (n - 5) // 2, qh
        )
    return poly


def golden_pauli(n: int) -> OperatorPoly:
    """Golden ``X'_n`` in normal form."""
    if n < 3 or n > max(PAULI_EVEN_TABLE):
        raise KeyError(f"no golden entry for X'_{n}")
    mu = Grade(m=-(n - 2), mu=1)
    if n % 2 == 0:
        return term(PAULI_EVEN_TABLE[n], Tail.FIELD_DOT, "B", (n - 4) // 2, mu)
    sig_e, sde = PAULI_ODD_TABLE[n]
    poly = term(GaussianRational(0, sig_e), Tail.SIGMA_FIELD, "E", (n - 3) // 2, mu)
    if sde:
        poly = poly + term(GaussianRational(0, sde), Tail.SIGMA_PI_FIELD_DOT, "E", (n - 5) // 2, mu)
    return poly


def golden_dirac_orders() -> list[int]:
    return sorted(set(DIRAC_TABLE) | {n for n in range(2, 14, 2)})


def golden_pauli_orders() -> list[int]:
    return sorted(set(PAULI_ODD_TABLE) | set(PAULI_EVEN_TABLE))
