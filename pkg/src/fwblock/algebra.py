"""Normal-form engine for the static-homogeneous, field-linear operator algebra.

Operators are finite sums of graded basis monomials

    coeff * m^pm c^pc hbar^ph q^pq mu''^pu * pi^{2k} * TAIL

with ``TAIL`` one of the six closed shapes (``F`` is ``E`` or ``B``)::

    1,  (s.pi),  (F.pi),  (s.F),  (s.pi)(F.pi),  ((Fxpi).s)

Every term carries at most one electromagnetic field factor; any product whose
result would be quadratic in the fields truncates to zero inside ``mul``, so
intermediate blowup is impossible.  Within field-linear terms the components of
``pi`` commute with each other and with ``E`` and ``B``.  Between *field-free*
factors the kinematic-momentum commutator does contribute one field-linear
term, through exactly two reduction rules:

    (s.pi)(s.pi)   = pi^2 - (q hbar / c) (s.B)
    (s.pi) pi^{2k} = pi^{2k} (s.pi) - 2ik (q hbar / c) pi^{2k-2} ((Bxpi).s)

Keeping the second rule is what makes the product associative and the stored
expansion of odd powers of ``(s.pi)`` hermitian; dropping it would break both.

The electrostatic potential ``phi`` is not a polynomial atom.  It acts only
through ``commutator_phi`` (it produces field-linear ``E`` terms and therefore
annihilates anything already field-linear) and as an additive ``q phi`` marker
carried outside the algebra by the series assembler.  Sign convention:
``E = -grad(phi)``, hence ``[phi, s.pi] = -i hbar (s.E)``.
"""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple

from .rational import GaussianRational

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)
_I = GaussianRational(0, 1)
_MINUS_I = GaussianRational(0, -1)


class Tail(Enum):
    ONE = 0
    SIGMA_PI = 1
    FIELD_DOT = 2
    SIGMA_FIELD = 3
    SIGMA_PI_FIELD_DOT = 4
    CROSS_SIGMA = 5


_FIELDLESS = (Tail.ONE, Tail.SIGMA_PI)

#: tail sign under pi -> -pi, sigma -> -sigma (charge conjugation)
_CC_TAIL_SIGN = {
    Tail.ONE: 1,
    Tail.SIGMA_PI: 1,
    Tail.FIELD_DOT: -1,
    Tail.SIGMA_FIELD: -1,
    Tail.SIGMA_PI_FIELD_DOT: -1,
    Tail.CROSS_SIGMA: 1,
}


class Grade(NamedTuple):
    """Unit exponents of a term: powers of m, c, hbar, q and mu'' = c mu'."""

    m: int = 0
    c: int = 0
    hbar: int = 0
    q: int = 0
    mu: int = 0

    def __add__(self, other: "Grade") -> "Grade":
        return Grade(*(x + y for x, y in zip(self, other)))


GRADE_0 = Grade()
#: grade of the q hbar / c factor produced by the field-linear pi commutator
_GRADE_QHC = Grade(0, -1, 1, 1, 0)
_GRADE_HBAR = Grade(0, 0, 1, 0, 0)


class Mono(NamedTuple):
    """A basis monomial ``pi^{2k} * tail`` with field ``E``/``B`` or None."""

    tail: Tail
    field: str | None
    k: int

    def has_field(self) -> bool:
        return self.field is not None


def _mono(tail: Tail, field: str | None, k: int) -> Mono:
    if k < 0:
        raise ValueError("negative pi^2 power")
    if tail in _FIELDLESS:
        if field is not None:
            raise ValueError(f"tail {tail} carries no field")
    elif field not in ("E", "B"):
        raise ValueError(f"tail {tail} needs field E or B")
    return Mono(tail, field, k)


TermKey = tuple[Grade, Mono]


class OperatorPoly:
    """Immutable normal-form operator polynomial.

    Terms are stored as a map ``(grade, mono) -> GaussianRational`` with zero
    coefficients dropped; two equal operators therefore have identical term
    maps, and iteration order is canonical (grade-lexicographic, then tail,
    then field, then ``k``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[TermKey, GaussianRational] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorPoly is immutable")

    # -- introspection --------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[TermKey, GaussianRational]]:
        return sorted(
            self._terms.items(),
            key=lambda item: (
                tuple(item[0][0]),
                item[0][1].tail.value,
                item[0][1].field or "",
                item[0][1].k,
            ),
        )

    def coefficient(self, grade: Grade, mono: Mono) -> GaussianRational:
        return self._terms.get((grade, mono), _ZERO)

    def max_field_order(self) -> int:
        return max((1 for _, mono in self._terms if mono.has_field()), default=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, OperatorPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- linear structure ------------------------------------------------
    def __add__(self, other: "OperatorPoly") -> "OperatorPoly":
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(out, key, coeff)
        return OperatorPoly(out)

    def __sub__(self, other: "OperatorPoly") -> "OperatorPoly":
        return self + (-other)

    def __neg__(self) -> "OperatorPoly":
        return OperatorPoly({key: -coeff for key, coeff in self._terms.items()})

    def scale(self, factor, grade: Grade = GRADE_0) -> "OperatorPoly":
        """Multiply by a scalar ``factor`` times the unit monomial ``grade``."""
        factor = GaussianRational.of(factor)
        if not factor:
            return OperatorPoly()
        return OperatorPoly(
            {(g + grade, mono): coeff * factor for (g, mono), coeff in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- involutions -------------------------------------------------------
    def dagger(self) -> "OperatorPoly":
        return dagger(self)

    def charge_conjugate(self) -> "OperatorPoly":
        return charge_conjugate(self)

    def hermitian_part(self) -> "OperatorPoly":
        return (self + dagger(self)).scale(Fraction(1, 2))

    def antihermitian_part(self) -> "OperatorPoly":
        return (self - dagger(self)).scale(Fraction(1, 2))

    # -- rendering -----------------------------------------------------------
    def __repr__(self) -> str:
        return f"OperatorPoly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _accumulate(store: dict, key: TermKey, coeff: GaussianRational) -> None:
    new = store.get(key, _ZERO) + coeff
    if new:
        store[key] = new
    else:
        store.pop(key, None)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def zero() -> OperatorPoly:
    return OperatorPoly()


def term(
    coeff,
    tail: Tail = Tail.ONE,
    field: str | None = None,
    k: int = 0,
    grade: Grade = GRADE_0,
) -> OperatorPoly:
    coeff = GaussianRational.of(coeff)
    if not coeff:
        return OperatorPoly()
    return OperatorPoly({(grade, _mono(tail, field, k)): coeff})


def one() -> OperatorPoly:
    return term(1)


def pi2(k: int = 1) -> OperatorPoly:
    return term(1, Tail.ONE, None, k)


def sigma_pi() -> OperatorPoly:
    return term(1, Tail.SIGMA_PI)


def sigma_field(field: str) -> OperatorPoly:
    return term(1, Tail.SIGMA_FIELD, field)


def field_dot_pi(field: str) -> OperatorPoly:
    return term(1, Tail.FIELD_DOT, field)


def cross_sigma(field: str) -> OperatorPoly:
    return term(1, Tail.CROSS_SIGMA, field)


# ---------------------------------------------------------------------------
# product
# ---------------------------------------------------------------------------

# Local products of two tails (pi^2 prefactors handled separately).  Values are
# lists of (dk, tail, field_source, coeff, extra_grade) where field_source is
# "L"/"R" (take the field of that operand) or "B" (the magnetic correction).
_QHC = ("B", _GRADE_QHC)

_TAIL_TABLE = {
    (Tail.SIGMA_PI, Tail.SIGMA_PI): [
        (1, Tail.ONE, None, _ONE, GRADE_0),
        (0, Tail.SIGMA_FIELD, _QHC, -_ONE, None),
    ],
    (Tail.SIGMA_PI, Tail.FIELD_DOT): [(0, Tail.SIGMA_PI_FIELD_DOT, "R", _ONE, GRADE_0)],
    (Tail.SIGMA_PI, Tail.SIGMA_FIELD): [
        (0, Tail.FIELD_DOT, "R", _ONE, GRADE_0),
        (0, Tail.CROSS_SIGMA, "R", _MINUS_I, GRADE_0),
    ],
    (Tail.SIGMA_PI, Tail.SIGMA_PI_FIELD_DOT): [(1, Tail.FIELD_DOT, "R", _ONE, GRADE_0)],
    (Tail.SIGMA_PI, Tail.CROSS_SIGMA): [
        (1, Tail.SIGMA_FIELD, "R", _I, GRADE_0),
        (0, Tail.SIGMA_PI_FIELD_DOT, "R", _MINUS_I, GRADE_0),
    ],
    (Tail.FIELD_DOT, Tail.SIGMA_PI): [(0, Tail.SIGMA_PI_FIELD_DOT, "L", _ONE, GRADE_0)],
    (Tail.SIGMA_FIELD, Tail.SIGMA_PI): [
        (0, Tail.FIELD_DOT, "L", _ONE, GRADE_0),
        (0, Tail.CROSS_SIGMA, "L", _I, GRADE_0),
    ],
    (Tail.SIGMA_PI_FIELD_DOT, Tail.SIGMA_PI): [(1, Tail.FIELD_DOT, "L", _ONE, GRADE_0)],
    (Tail.CROSS_SIGMA, Tail.SIGMA_PI): [
        (1, Tail.SIGMA_FIELD, "L", _MINUS_I, GRADE_0),
        (0, Tail.SIGMA_PI_FIELD_DOT, "L", _I, GRADE_0),
    ],
}

# (Bxpi).s times a field-free tail; used by the pi-commutator shift rule.
_CROSS_B_TIMES = {
    Tail.ONE: [(0, Tail.CROSS_SIGMA, "B", _ONE)],
    Tail.SIGMA_PI: [
        (1, Tail.SIGMA_FIELD, "B", _MINUS_I),
        (0, Tail.SIGMA_PI_FIELD_DOT, "B", _I),
    ],
}


def _emit(out, grade: Grade, k: int, coeff: GaussianRational, rules, f_left, f_right):
    for rule in rules:
        dk, tail, f_src, factor, extra = rule
        if f_src is None:
            field = None
            add_grade = extra
        elif f_src == "L":
            field = f_left
            add_grade = extra
        elif f_src == "R":
            field = f_right
            add_grade = extra
        else:  # magnetic correction carries its own grade
            field, add_grade = f_src
        key = (grade + add_grade if add_grade else grade, Mono(tail, field, k + dk))
        _accumulate(out, key, coeff * factor)


def mul(left: OperatorPoly, right: OperatorPoly) -> OperatorPoly:
    """Product of two normal-form polynomials, reduced to normal form.

    Any term pair whose product would carry two field factors is dropped
    (weak-field truncation happens here, not as a post-pass).
    """
    out: dict[TermKey, GaussianRational] = {}
    for (g1, m1), c1 in left._terms.items():
        for (g2, m2), c2 in right._terms.items():
            if m1.has_field() and m2.has_field():
                continue
            coeff = c1 * c2
            grade = g1 + g2
            k = m1.k + m2.k
            if m1.tail is Tail.ONE:
                _accumulate(out, (grade, Mono(m2.tail, m2.field, k)), coeff)
                continue
            if m2.tail is Tail.ONE and m2.k == 0:
                _accumulate(out, (grade, Mono(m1.tail, m1.field, k)), coeff)
                continue
            if m2.tail is Tail.ONE:
                # right factor is a pure pi^{2k2} power
                if m1.tail is Tail.SIGMA_PI:
                    _accumulate(out, (grade, Mono(Tail.SIGMA_PI, None, k)), coeff)
                    shift = coeff * GaussianRational(0, -2 * m2.k)
                    key = (grade + _GRADE_QHC, Mono(Tail.CROSS_SIGMA, "B", k - 1))
                    _accumulate(out, key, shift)
                else:
                    _accumulate(out, (grade, Mono(m1.tail, m1.field, k)), coeff)
                continue
            rules = _TAIL_TABLE.get((m1.tail, m2.tail))
            if rules is not None:
                _emit(out, grade, k, coeff, rules, m1.field, m2.field)
            if m1.tail is Tail.SIGMA_PI and m2.k > 0:
                # commute (s.pi) through pi^{2k2}: field-linear B correction
                shift = coeff * GaussianRational(0, -2 * m2.k)
                for dk, tail, f_src, factor in _CROSS_B_TIMES.get(m2.tail, ()):
                    key = (grade + _GRADE_QHC, Mono(tail, "B", k - 1 + dk))
                    _accumulate(out, key, shift * factor)
    return OperatorPoly(out)


def mul_many(factors: Iterable[OperatorPoly]) -> OperatorPoly:
    result = one()
    for factor in factors:
        result = mul(result, factor)
    return result


_sigma_pi_power_cache: dict[int, OperatorPoly] = {}


def sigma_pi_power(n: int) -> OperatorPoly:
    """Canonical normal-form expansion of ``(s.pi)^n`` (memoized)."""
    if n < 0:
        raise ValueError("negative power")
    if n not in _sigma_pi_power_cache:
        if n == 0:
            value = one()
        else:
            value = mul(sigma_pi_power(n - 1), sigma_pi())
        _sigma_pi_power_cache[n] = value
    return _sigma_pi_power_cache[n]


# ---------------------------------------------------------------------------
# involutions and derivations
# ---------------------------------------------------------------------------


def dagger(poly: OperatorPoly) -> OperatorPoly:
    """Hermitian conjugate.

    All basis tails are self-adjoint except ``pi^{2k}(s.pi)`` with ``k >= 1``,
    whose adjoint picks up the field-linear magnetic commutator term.
    """
    out: dict[TermKey, GaussianRational] = {}
    for (grade, mono), coeff in poly._terms.items():
        conj = coeff.conjugate()
        _accumulate(out, (grade, mono), conj)
        if mono.tail is Tail.SIGMA_PI and mono.k >= 1:
            extra = conj * GaussianRational(0, -2 * mono.k)
            key = (grade + _GRADE_QHC, Mono(Tail.CROSS_SIGMA, "B", mono.k - 1))
            _accumulate(out, key, extra)
    return OperatorPoly(out)


def commutator_phi(poly: OperatorPoly) -> OperatorPoly:
    """``[phi, P]`` for a homogeneous static electric field, ``E = -grad(phi)``.

    Field-linear terms are annihilated (the commutator would be quadratic in
    the fields); on the field-free tails::

        [phi, pi^{2k}]        = -2ik hbar pi^{2k-2} (E.pi)
        [phi, pi^{2k}(s.pi)]  = -i hbar pi^{2k} (s.E)
                                - 2ik hbar pi^{2k-2} (s.pi)(E.pi)
    """
    out: dict[TermKey, GaussianRational] = {}
    for (grade, mono), coeff in poly._terms.items():
        if mono.has_field():
            continue
        g = grade + _GRADE_HBAR
        if mono.tail is Tail.ONE:
            if mono.k >= 1:
                factor = coeff * GaussianRational(0, -2 * mono.k)
                _accumulate(out, (g, Mono(Tail.FIELD_DOT, "E", mono.k - 1)), factor)
        else:  # SIGMA_PI
            _accumulate(out, (g, Mono(Tail.SIGMA_FIELD, "E", mono.k)), coeff * _MINUS_I)
            if mono.k >= 1:
                factor = coeff * GaussianRational(0, -2 * mono.k)
                _accumulate(out, (g, Mono(Tail.SIGMA_PI_FIELD_DOT, "E", mono.k - 1)), factor)
    return OperatorPoly(out)


def charge_conjugate(poly: OperatorPoly) -> OperatorPoly:
    """Formal replacement ``pi, sigma, q, mu', i -> -pi, -sigma, -q, -mu', -i``.

    External field vectors are untouched; the sign lands once per ``pi`` and
    ``sigma`` factor in the tail, once per power of ``q`` and ``mu''`` in the
    grade, and the coefficient is conjugated.
    """
    out: dict[TermKey, GaussianRational] = {}
    for (grade, mono), coeff in poly._terms.items():
        sign = _CC_TAIL_SIGN[mono.tail]
        if (grade.q + grade.mu) % 2:
            sign = -sign
        value = coeff.conjugate()
        if sign < 0:
            value = -value
        _accumulate(out, (grade, mono), value)
    return OperatorPoly(out)


# ---------------------------------------------------------------------------
# rendering and serialization
# ---------------------------------------------------------------------------

_TAIL_TEXT = {
    Tail.ONE: "",
    Tail.SIGMA_PI: "(s.pi)",
    Tail.FIELD_DOT: "({f}.pi)",
    Tail.SIGMA_FIELD: "(s.{f})",
    Tail.SIGMA_PI_FIELD_DOT: "(s.pi)({f}.pi)",
    Tail.CROSS_SIGMA: "(({f}xpi).s)",
}

#: unit symbols in presentation order: couplings first, then hbar, m, c
_UNIT_ORDER = (("q", 3), ("mu''", 4), ("hbar", 2), ("m", 0), ("c", 1))


def _coeff_text(coeff: GaussianRational) -> str:
    if coeff.is_real:
        return f"({coeff.re})"
    if coeff.is_imaginary:
        if coeff.im == 1:
            return "i"
        if coeff.im == -1:
            return "(-1) i"
        return f"({coeff.im}) i"
    return f"({coeff.re} + {coeff.im} i)"


def render_term(grade: Grade, mono: Mono, coeff: GaussianRational) -> str:
    parts = [_coeff_text(coeff)]
    for name, index in _UNIT_ORDER:
        power = grade[index]
        if power == 1:
            parts.append(name)
        elif power:
            parts.append(f"{name}^{power}")
    if mono.k == 1:
        parts.append("pi2")
    elif mono.k:
        parts.append(f"pi2^{mono.k}")
    tail = _TAIL_TEXT[mono.tail].format(f=mono.field)
    if tail:
        parts.append(tail)
    return " ".join(parts)


def render(poly: OperatorPoly) -> str:
    if not poly:
        return "0"
    return " + ".join(render_term(g, m, c) for (g, m), c in poly.terms())


def to_json_terms(poly: OperatorPoly) -> list[dict]:
    """JSON-ready term list (stable order, exact rational strings)."""
    out = []
    for (grade, mono), coeff in poly.terms():
        out.append(
            {
                "coeff_re": str(coeff.re),
                "coeff_im": str(coeff.im),
                "grade": {"m": grade.m, "c": grade.c, "hbar": grade.hbar, "q": grade.q, "mu": grade.mu},
                "tail": mono.tail.name.lower(),
                "field": mono.field,
                "k": mono.k,
            }
        )
    return out


def from_json_terms(records: list[dict]) -> OperatorPoly:
    terms: dict[TermKey, GaussianRational] = {}
    for rec in records:
        grade = Grade(**rec["grade"])
        mono = _mono(Tail[rec["tail"].upper()], rec["field"], rec["k"])
        coeff = GaussianRational(Fraction(rec["coeff_re"]), Fraction(rec["coeff_im"]))
        _accumulate(terms, (grade, mono), coeff)
    return OperatorPoly(terms)


def poly_to_json(poly: OperatorPoly) -> str:
    return json.dumps(to_json_terms(poly), separators=(",", ":"))


def poly_from_json(text: str) -> OperatorPoly:
    return from_json_terms(json.loads(text))


# ---------------------------------------------------------------------------
# numeric evaluation
# ---------------------------------------------------------------------------


def eval_matrix(poly: OperatorPoly, units: dict, pi, E, B, flip_sigma: bool = False):
    """Evaluate to a numeric 2x2 complex matrix.

    ``units`` supplies the numeric values of ``m``, ``c``, ``hbar``, ``q`` and
    ``mu''``; ``pi``, ``E``, ``B`` are real 3-vectors.  ``flip_sigma`` replaces
    the Pauli vector by its negative (used for charge-conjugation checks).
    """
    import numpy as np

    sigma = _pauli_vector()
    if flip_sigma:
        sigma = tuple(-s for s in sigma)
    pi = np.asarray(pi, dtype=float)
    vectors = {"E": np.asarray(E, dtype=float), "B": np.asarray(B, dtype=float)}
    pi2_val = float(pi @ pi)
    eye = np.eye(2, dtype=complex)

    def dot_sigma(v):
        return v[0] * sigma[0] + v[1] * sigma[1] + v[2] * sigma[2]

    total = np.zeros((2, 2), dtype=complex)
    for (grade, mono), coeff in poly._terms.items():
        scalar = complex(coeff)
        for name, power in zip(("m", "c", "hbar", "q", "mu"), grade):
            if power:
                scalar *= units[name] ** power
        scalar *= pi2_val**mono.k
        f = vectors.get(mono.field)
        if mono.tail is Tail.ONE:
            mat = eye
        elif mono.tail is Tail.SIGMA_PI:
            mat = dot_sigma(pi)
        elif mono.tail is Tail.FIELD_DOT:
            mat = float(f @ pi) * eye
        elif mono.tail is Tail.SIGMA_FIELD:
            mat = dot_sigma(f)
        elif mono.tail is Tail.SIGMA_PI_FIELD_DOT:
            mat = dot_sigma(pi) * float(f @ pi)
        else:  # CROSS_SIGMA
            mat = dot_sigma(np.cross(f, pi))
        total = total + scalar * mat
    return total


def _pauli_vector():
    import numpy as np

    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return sx, sy, sz
