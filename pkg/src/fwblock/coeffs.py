"""Integer coefficient sequences of the block-diagonalization series.

Five sequences drive every series in this package:

* ``a_j = (2j)!/(j!(j+1)!)`` -- the Catalan numbers,
* ``b_j = (2j-1)!/(j!(j-1)!)`` for ``j >= 1`` (``b_0 = 0``),
* ``c_j = 2 * sum_{j1+j2=j} b_{j1} b_{j2}``,
* ``d_j = sum_{j1+j2+j3=j-2} 2(j1+1) a_{j1} a_{j2} a_{j3}`` for ``j >= 2``,
* ``e_n = binom(1/2, n)`` -- the square-root binomial coefficients.

The convolutions for ``c`` and ``d`` are evaluated literally (they are the
definitions under test), memoized bottom-up.  Six combinatorial identities
relate the sequences; ``verify_identity`` checks each one exactly over a
requested index range.  The generating functions are available through
``closed_form`` and ``partial_sum`` for convergence studies: every series has
radius of convergence ``|x| < 1`` while the closed forms are entire on the
reals.

Two stated forms in the source material are internally inconsistent and are
corrected here to the variant that the sequences actually satisfy (each is
pinned by exact tests):

* identity C:  ``2*sum a_{j1} c_{j2} = c_j - b_j + a_{j-1}``  (not ``+ a_j``),
* identity F:  ``b_{j+1} - a_j = d_{j+1}``  (not ``b_{j+1} + a_j``).
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction


class CoeffKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E_BINOM = "E_binom"


class SeriesKind(str, Enum):
    """Closed forms / Taylor series selectable in ``closed_form``."""

    FA = "Fa"
    FB = "Fb"
    FC = "Fc"
    FD = "Fd"
    SQRT = "Sqrt"
    INV_SQRT = "InvSqrt"


# ---------------------------------------------------------------------------
# sequence tables (grow-on-demand; construction is single-writer)
# ---------------------------------------------------------------------------

_c_table: list[int] = []
_d_table: list[int] = []
_aa_table: list[int] = []  # plain Catalan self-convolution, used by d
_e_table: list[Fraction] = [Fraction(1)]


def a(j: int) -> int:
    if j < 0:
        raise ValueError("index must be nonnegative")
    return math.comb(2 * j, j) // (j + 1)


def b(j: int) -> int:
    if j < 0:
        raise ValueError("index must be nonnegative")
    if j == 0:
        return 0
    return math.comb(2 * j - 1, j)


def _aa(n: int) -> int:
    while len(_aa_table) <= n:
        m = len(_aa_table)
        _aa_table.append(sum(a(j1) * a(m - j1) for j1 in range(m + 1)))
    return _aa_table[n]


def c(j: int) -> int:
    if j < 0:
        raise ValueError("index must be nonnegative")
    while len(_c_table) <= j:
        m = len(_c_table)
        _c_table.append(2 * sum(b(j1) * b(m - j1) for j1 in range(m + 1)))
    return _c_table[j]


def d(j: int) -> int:
    if j < 0:
        raise ValueError("index must be nonnegative")
    if j < 2:
        return 0
    while len(_d_table) <= j - 2:
        m = len(_d_table)  # corresponds to index j = m + 2
        _d_table.append(2 * sum((j1 + 1) * a(j1) * _aa(m - j1) for j1 in range(m + 1)))
    return _d_table[j - 2]


def e(n: int) -> Fraction:
    """Binomial coefficient ``binom(1/2, n)`` of the square-root series."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    while len(_e_table) <= n:
        m = len(_e_table)
        _e_table.append(_e_table[-1] * (Fraction(1, 2) - (m - 1)) / m)
    return _e_table[n]


def coeff(kind: CoeffKind, j: int) -> Fraction:
    """Exact value of the requested sequence at index ``j``."""
    kind = CoeffKind(kind)
    if j < 0:
        raise ValueError("index must be nonnegative")
    if kind is CoeffKind.A:
        return Fraction(a(j))
    if kind is CoeffKind.B:
        return Fraction(b(j))
    if kind is CoeffKind.C:
        return Fraction(c(j))
    if kind is CoeffKind.D:
        return Fraction(d(j))
    return e(j)


# ---------------------------------------------------------------------------
# combinatorial identities
# ---------------------------------------------------------------------------


class IdentityKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


#: first index at which each identity is stated
_IDENTITY_START = {
    IdentityKind.A: 1,
    IdentityKind.B: 1,
    IdentityKind.C: 1,
    IdentityKind.D: 0,
    IdentityKind.E: 2,
    IdentityKind.F: 0,
}


def _identity_sides(kind: IdentityKind, j: int) -> tuple[int, int]:
    if kind is IdentityKind.A:
        lhs = sum(a(j1) * a(j - 1 - j1) for j1 in range(j))
        rhs = a(j)
    elif kind is IdentityKind.B:
        lhs = 2 * sum(a(j1) * b(j - 1 - j1) for j1 in range(j))
        rhs = b(j) - a(j - 1)
    elif kind is IdentityKind.C:
        lhs = 2 * sum(a(j1) * c(j - 1 - j1) for j1 in range(j))
        rhs = c(j) - b(j) + a(j - 1)
    elif kind is IdentityKind.D:
        lhs = b(j + 1) + c(j + 1)
        rhs = 4 * b(j) + 4 * c(j) + a(j)
    elif kind is IdentityKind.E:
        lhs = 2 * sum(a(j1) * d(j - 1 - j1) for j1 in range(j)) + 2 * a(j - 1)
        rhs = d(j)
    elif kind is IdentityKind.F:
        lhs = b(j + 1) - a(j)
        rhs = d(j + 1)
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(kind)
    return lhs, rhs


def verify_identity(kind: IdentityKind, j_max: int) -> list[dict]:
    """Check one identity exactly for every index in its stated range.

    Returns one record per index: ``{identity, j, lhs, rhs, pass}``.  A failed
    identity is reported, never raised.
    """
    kind = IdentityKind(kind)
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    records = []
    for j in range(_IDENTITY_START[kind], j_max + 1):
        lhs, rhs = _identity_sides(kind, j)
        records.append(
            {"identity": kind.value, "j": j, "lhs": str(lhs), "rhs": str(rhs), "pass": lhs == rhs}
        )
    return records


def verify_all_identities(j_max: int) -> dict:
    """Run identities A..F up to ``j_max``; returns records plus a verdict."""
    records = []
    for kind in IdentityKind:
        records.extend(verify_identity(kind, j_max))
    return {"records": records, "passed": all(r["pass"] for r in records)}


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------


def closed_form(kind: SeriesKind, x: float) -> float:
    """Closed-form value of the named generating function at real ``x``."""
    kind = SeriesKind(kind)
    g = math.sqrt(1.0 + x * x)
    if kind is SeriesKind.FA:
        return x / (1.0 + g)
    if kind is SeriesKind.FB:
        return 0.5 * (1.0 / (1.0 + g) - 1.0 / g)
    if kind is SeriesKind.FC:
        # square of twice the Fb form; the prefactor follows from
        # c_j = 2 sum b_{j1} b_{j2} (pinned by the x = 0 value c_2/16 = 1/8)
        w = 1.0 / (1.0 + g) - 1.0 / g
        return w * w / 2.0
    if kind is SeriesKind.FD:
        return (1.0 / g) * (1.0 / (1.0 + g)) ** 2
    if kind is SeriesKind.SQRT:
        return g
    return 1.0 / g


def _scaled(numerator: int, log2_denominator: int) -> float:
    # float(huge int / huge power of two) without intermediate float overflow
    return float(Fraction(numerator, 2**log2_denominator))


def partial_sum(kind: SeriesKind, x: float, terms: int) -> float:
    """Sum of the first ``terms`` Taylor terms of the named series at ``x``.

    Converges to ``closed_form(kind, x)`` for ``|x| < 1``; diverges outside.
    """
    kind = SeriesKind(kind)
    if terms < 0:
        raise ValueError("terms must be >= 0")
    total = 0.0
    if kind is SeriesKind.FA:
        for j in range(terms):
            total += _scaled(a(j), 2 * j + 1) * (-1.0) ** j * x ** (2 * j + 1)
    elif kind is SeriesKind.FB:
        for j in range(1, terms + 1):
            total += _scaled(b(j), 2 * j) * (-1.0) ** j * x ** (2 * j - 2)
    elif kind is SeriesKind.FC:
        for j in range(2, terms + 2):
            total += _scaled(c(j), 2 * j) * (-1.0) ** j * x ** (2 * j - 4)
    elif kind is SeriesKind.FD:
        for j in range(2, terms + 2):
            total += _scaled(d(j), 2 * j - 1) * (-1.0) ** j * x ** (2 * j - 4)
    elif kind is SeriesKind.SQRT:
        total = 1.0
        for j in range(terms):
            total += _scaled(a(j), 2 * j + 1) * (-1.0) ** j * x ** (2 * (j + 1))
    else:  # INV_SQRT
        for j in range(terms):
            total += _scaled((j + 1) * a(j), 2 * j) * (-1.0) ** j * x ** (2 * j)
    return total
