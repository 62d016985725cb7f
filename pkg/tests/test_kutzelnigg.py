"""Series recursion vs golden tables, all-order closed forms, and assembly."""

from fractions import Fraction

import pytest

from fwblock import coeffs, golden, kutzelnigg as ktz
from fwblock.algebra import (
    Grade,
    Mono,
    Tail,
    mul,
    sigma_pi,
    sigma_pi_power,
    term,
    zero,
)
from fwblock.rational import GaussianRational


# ---------------------------------------------------------------------------
# generator series vs the embedded golden tables
# ---------------------------------------------------------------------------


def test_x1():
    series = ktz.dirac_series(1)
    assert series.entry(1) == sigma_pi().scale(Fraction(1, 2), Grade(m=-1))


def test_x3_explicit():
    x3 = ktz.dirac_series(3).entry(3)
    want = sigma_pi_power(3).scale(Fraction(-1, 8), Grade(m=-3)) + term(
        GaussianRational(0, Fraction(-1, 4)),
        Tail.SIGMA_FIELD,
        "E",
        0,
        Grade(m=-2, hbar=1, q=1),
    )
    assert x3 == want


def test_even_orders_vanish():
    series = ktz.dirac_series(20)
    for n in range(2, 21, 2):
        assert series.entry(n) == 0


def test_dirac_series_matches_golden_tables():
    series = ktz.dirac_series(13)
    for n in golden.golden_dirac_orders():
        assert series.entry(n) == golden.golden_dirac(n), f"X_{n} mismatch"


def test_pauli_series_matches_golden_tables():
    series = ktz.pauli_series(12)
    assert series.entry(1) == 0
    assert series.entry(2) == 0
    for n in golden.golden_pauli_orders():
        assert series.entry(n) == golden.golden_pauli(n), f"X'_{n} mismatch"


def test_x13_coefficients():
    x13 = ktz.dirac_series(13).entry(13)
    qh = Grade(m=-12, hbar=1, q=1)
    assert x13.coefficient(qh, Mono(Tail.SIGMA_FIELD, "E", 5)) == GaussianRational(
        0, Fraction(231, 2048)
    )
    assert x13.coefficient(qh, Mono(Tail.SIGMA_PI_FIELD_DOT, "E", 4)) == GaussianRational(
        0, Fraction(281, 1024)
    )
    assert x13.coefficient(Grade(m=-13), Mono(Tail.SIGMA_PI, None, 6)) == Fraction(33, 2048)


def test_xprime_4_and_12():
    series = ktz.pauli_series(12)
    assert series.entry(4) == term(Fraction(1, 2), Tail.FIELD_DOT, "B", 0, Grade(m=-2, mu=1))
    assert series.entry(12) == term(
        Fraction(63, 256), Tail.FIELD_DOT, "B", 4, Grade(m=-10, mu=1)
    )


# ---------------------------------------------------------------------------
# all-order closed forms
# ---------------------------------------------------------------------------


def test_theorem1_matches_recursion_to_31():
    series = ktz.dirac_series(31)
    for n in range(1, 32):
        assert series.entry(n) == ktz.theorem_closed_form(ktz.Theorem.T1, n), f"order {n}"


def test_theorem2_matches_recursion_to_30():
    series = ktz.pauli_series(30)
    for n in range(2, 31):
        assert series.entry(n) == ktz.theorem_closed_form(ktz.Theorem.T2, n), f"order {n}"


def test_theorem2_rejects_low_order():
    with pytest.raises(ValueError):
        ktz.theorem_closed_form(ktz.Theorem.T2, 1)


def test_theorem1_even_orders_zero():
    for n in range(0, 12, 2):
        assert ktz.theorem_closed_form(ktz.Theorem.T1, n) == 0


# ---------------------------------------------------------------------------
# X^dag X structure and commutation lemmas
# ---------------------------------------------------------------------------


def test_xdagx_purity():
    """X^dag X contains only pi^{2k}, the (s.B) expansion family, and ((Expi).s)."""
    table = ktz.xdagx_series(20)
    for n, poly in table.entries.items():
        for (grade, mono), _ in poly.terms():
            assert mono.tail in (Tail.ONE, Tail.SIGMA_FIELD, Tail.CROSS_SIGMA), (n, mono)
            if mono.tail is Tail.SIGMA_FIELD:
                assert mono.field == "B"
            if mono.tail is Tail.CROSS_SIGMA:
                assert mono.field == "E"


def test_xdagx_even_orders_match_spinor_power_expansion():
    """Field-free + magnetic part of (X^dag X)_{2j+2} is a_{j+1} (s.pi)^{2j+2}."""
    table = ktz.xdagx_series(14)
    for j in range(0, 6):
        n = 2 * j + 2
        want = sigma_pi_power(n).scale(
            Fraction(coeffs.a(j + 1) * (-1) ** j, 2 ** (2 * j + 2)), Grade(m=-n)
        )
        got = ktz.zero() if n not in table.entries else table.entries[n]
        electric = [
            ((g, m), c) for (g, m), c in got.terms() if m.field == "E"
        ]
        stripped = got + ktz.zero()
        for key, coeff in electric:
            stripped = stripped - ktz.OperatorPoly({key: coeff})
        assert stripped == want, f"index {n}"


def test_sigma_pi_x_commutes_with_xdagx():
    """[c (s.pi) X, X^dag X] = 0 order by order at field-linear truncation."""
    x = ktz.dirac_series(16)
    t = ktz.xdagx_series(16)
    h0x = {n: mul(sigma_pi(), x.entry(n + 1)) for n in range(16)}
    for n_a, a in h0x.items():
        for n_b, b in t.entries.items():
            if n_a + n_b <= 16:
                assert mul(a, b) == mul(b, a), (n_a, n_b)


def test_resolvent_series_inverts():
    t = ktz.xdagx_series(12).entries
    inv = ktz._inverse_one_plus(t, 12)
    # (1 + T) * inv == 1 order by order
    for n in range(13):
        total = inv[n] + sum(
            (mul(t[k], inv[n - k]) for k in t if k <= n), start=zero()
        )
        assert total == (ktz.one() if n == 0 else zero()), n


def test_binomial_series_squares_to_inverse():
    """(1+T)^{1/2} composed with itself reproduces 1 + T."""
    t = ktz.xdagx_series(10).entries
    half = ktz.binomial_series(t, 10, Fraction(1, 2))
    for n in range(11):
        total = sum(
            (mul(half[i], half[n - i]) for i in range(n + 1)), start=zero()
        )
        want = ktz.one() if n == 0 else t.get(n, zero())
        assert total == want, n


# ---------------------------------------------------------------------------
# Hamiltonian assembly
# ---------------------------------------------------------------------------


def test_hfw_order_zero():
    # pi^2/(2m) - (q hbar / 2mc)(s.B)
    h = ktz.assemble_HFW(0)
    expected = mul(sigma_pi(), sigma_pi()).scale(Fraction(1, 2), Grade(m=-1))
    assert h.orders[0] == expected


def test_hfw_orders_match_closed_series():
    h = ktz.assemble_HFW(24)
    for n in range(25):
        assert h.orders[n] == ktz.hfw_series_order(n), f"order {n}"


def test_hfw_hermitian_every_order():
    h = ktz.assemble_HFW(24)
    for n, poly in h.orders.items():
        assert poly.antihermitian_part() == 0, f"order {n}"


def test_calhfw_orders_match_closed_series():
    h = ktz.assemble_calHFW(20)
    for n in range(21):
        want = ktz.hfw_series_order(n) + ktz.hprime_series_order(n)
        assert h.orders[n] == want, f"order {n}"


def test_calhfw_hermitian_every_order():
    h = ktz.assemble_calHFW(20)
    for n, poly in h.orders.items():
        assert poly.antihermitian_part() == 0, f"order {n}"


def test_hprime_sigma_pi_b_dot_pi_family():
    """The (s.pi)(B.pi) family carries -2 mu'' b_j (-1)^j / (2m)^{2j}."""
    h = ktz.assemble_calHFW(15)
    for j in range(1, 7):
        n = 2 * j + 1
        mono = Mono(Tail.SIGMA_PI_FIELD_DOT, "B", j - 1)
        grade = Grade(m=-2 * j, mu=1)
        want = Fraction(-2 * coeffs.b(j) * (-1) ** j, 2 ** (2 * j))
        assert h.orders[n].coefficient(grade, mono) == want, n


def test_lower_block_equals_charge_conjugated_upper():
    upper = ktz.assemble_calHFW(18)
    lower = ktz.lower_block(18)
    mirrored = ktz.charge_conjugated(upper)
    assert lower.rest_mass_sign == -1 == mirrored.rest_mass_sign
    for n in range(19):
        assert lower.orders[n] == mirrored.orders[n], f"order {n}"


def test_double_conjugation_is_identity():
    upper = ktz.assemble_calHFW(10)
    again = ktz.charge_conjugated(ktz.charge_conjugated(upper))
    assert again.rest_mass_sign == upper.rest_mass_sign
    for n, poly in upper.orders.items():
        assert again.orders[n] == poly


def test_free_particle_sector_sign_structure():
    """Even tails of the lower block are the negated upper-block ones."""
    upper = ktz.assemble_HFW(8)
    lower = ktz.lower_block(8)
    for n in range(0, 9, 2):
        upper_fieldfree = [
            (key, c) for key, c in upper.orders[n].terms() if key[1].tail is Tail.ONE
        ]
        for (grade, mono), coeff in upper_fieldfree:
            assert lower.orders[n].coefficient(grade, mono) == -coeff


def test_weak_field_grade_invariant():
    """Field-carrying terms hold at most one coupling power (q or mu'')."""
    tables = [ktz.dirac_series(25), ktz.pauli_series(25)]
    hams = [ktz.assemble_calHFW(25), ktz.lower_block(25)]
    polys = [p for t in tables for p in t.entries.values()]
    polys += [p for h in hams for p in h.orders.values()]
    for poly in polys:
        for (grade, mono), _ in poly.terms():
            if mono.has_field():
                assert grade.q + grade.mu <= 1, (grade, mono)
            else:
                assert grade.q == grade.mu == 0, (grade, mono)


# ---------------------------------------------------------------------------
# numeric sanity of the assembled series
# ---------------------------------------------------------------------------


def test_series_numeric_value_against_free_particle():
    import numpy as np

    units = {"m": 1.0, "c": 1.0, "hbar": 1.0, "q": 0.0, "mu": 0.0}
    h = ktz.assemble_HFW(30)
    pi = np.array([0.3, -0.1, 0.2])
    got = ktz.eval_hamiltonian(h, units, pi, np.zeros(3), np.zeros(3))
    want = np.sqrt(1.0 + pi @ pi) * np.eye(2)
    assert np.allclose(got, want, rtol=1e-12, atol=1e-12)
