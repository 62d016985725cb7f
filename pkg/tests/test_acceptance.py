"""Acceptance criteria, one test per criterion, at the pinned tolerances.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-s`` or
in captured output on failure) and asserts the criterion.  Tolerances are
fixed here and nowhere else; no criterion defers to later calibration.
"""

import time

import numpy as np

from fwblock import coeffs, golden, kutzelnigg as ktz, matrixlab
from fwblock.closedform import (
    FieldPoint,
    PhysicalParams,
    HFW_closed,
    calHFW_closed,
    classical_H,
    spin_splitting,
)

PARAMS = PhysicalParams(m=1.0, c=1.0, q=0.7, hbar=1.0, mu_prime=8e-4)


def _report(number: int, description: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"[{status}] criterion {number:2d}: {description}{suffix}")
    assert passed, f"criterion {number} failed: {description} {suffix}"


def test_criterion_01_golden_tables():
    start = time.perf_counter()
    x = ktz.dirac_series(13)
    xp = ktz.pauli_series(12)
    ok = all(x.entry(n) == golden.golden_dirac(n) for n in golden.golden_dirac_orders())
    ok = ok and all(
        xp.entry(n) == golden.golden_pauli(n) for n in golden.golden_pauli_orders()
    )
    elapsed = time.perf_counter() - start
    _report(
        1,
        "series reproduce the reference tables exactly",
        ok and elapsed < 5.0,
        f"{elapsed:.2f}s",
    )


def test_criterion_02_generator_closed_form_to_31():
    start = time.perf_counter()
    x = ktz.dirac_series(31)
    ok = all(
        x.entry(n) == ktz.theorem_closed_form(ktz.Theorem.T1, n) for n in range(1, 32)
    )
    elapsed = time.perf_counter() - start
    _report(
        2,
        "recursion equals the all-order closed form through order 31",
        ok and elapsed < 60.0,
        f"{elapsed:.2f}s",
    )


def test_criterion_03_moment_generator_closed_form_to_30():
    start = time.perf_counter()
    xp = ktz.pauli_series(30)
    ok = all(
        xp.entry(n) == ktz.theorem_closed_form(ktz.Theorem.T2, n) for n in range(2, 31)
    )
    elapsed = time.perf_counter() - start
    _report(
        3,
        "moment recursion equals its all-order closed form through order 30",
        ok and elapsed < 60.0,
        f"{elapsed:.2f}s",
    )


def test_criterion_04_combinatorial_identities_to_200():
    start = time.perf_counter()
    result = coeffs.verify_all_identities(200)
    elapsed = time.perf_counter() - start
    _report(
        4,
        "identities A-F hold exactly for j up to 200",
        result["passed"] and elapsed < 5.0,
        f"{len(result['records'])} checks, {elapsed:.2f}s",
    )


def test_criterion_05_hermiticity_every_order():
    h = ktz.assemble_HFW(30)
    cal = ktz.assemble_calHFW(30)
    bad = [
        n
        for n in range(31)
        if h.orders[n].antihermitian_part() or cal.orders[n].antihermitian_part()
    ]
    _report(
        5,
        "antihermitian part vanishes exactly at every order <= 30",
        not bad,
        f"orders checked: 0..30",
    )


def test_criterion_06_resummation_and_divergence():
    units = PARAMS.units()
    rng = np.random.default_rng(101)
    E = tuple(rng.uniform(-1e-3, 1e-3, 3))
    B = tuple(rng.uniform(-1e-3, 1e-3, 3))
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    h = ktz.assemble_HFW(50)
    cal = ktz.assemble_calHFW(50)
    worst = 0.0
    for ratio in (0.2, 0.4, 0.6):
        pi = ratio * PARAMS.m * PARAMS.c * direction
        point = FieldPoint(pi=tuple(pi), E=E, B=B, phi=0.05)
        for series, closed in (
            (h, HFW_closed(PARAMS, point)),
            (cal, calHFW_closed(PARAMS, point)),
        ):
            partial = ktz.eval_hamiltonian(
                series, units, pi, E, B, phi=point.phi, max_order=30
            )
            worst = max(
                worst, np.linalg.norm(partial - closed) / np.linalg.norm(closed)
            )
    converge_ok = worst <= 1e-9

    pi_out = 1.2 * PARAMS.m * PARAMS.c * direction
    point = FieldPoint(pi=tuple(pi_out), E=E, B=B)
    closed = calHFW_closed(PARAMS, point)
    errors = [
        np.linalg.norm(
            ktz.eval_hamiltonian(cal, units, pi_out, E, B, max_order=order) - closed
        )
        / np.linalg.norm(closed)
        for order in (10, 20, 30, 40, 50)
    ]
    diverge_ok = (
        all(late > early for early, late in zip(errors, errors[1:]))
        and errors[-1] > 1.0
        and np.all(np.isfinite(closed))
    )
    _report(
        6,
        "series matches closed forms to 1e-9 inside the radius, diverges at 1.2",
        converge_ok and diverge_ok,
        f"max rel err {worst:.2e}; outside errors {errors[0]:.2e}->{errors[-1]:.2e}",
    )


def test_criterion_07_case1_blocks_and_massless_limit():
    params = PhysicalParams(m=1.0, c=1.0, q=0.5, hbar=1.0)
    rng = np.random.default_rng(7)
    worst_off = worst_match = 0.0
    for _ in range(100):
        raw = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        M = rng.uniform(0.2, 3.0) * (raw + raw.conj().T) / 2
        result = matrixlab.solve_case1(params, M)
        want = matrixlab.hermitian_sqrt(np.eye(2) + M @ M)
        worst_off = max(worst_off, result.offdiag_norm / np.linalg.norm(result.H))
        worst_match = max(
            worst_match,
            np.linalg.norm(result.upper_block - want) / np.linalg.norm(want),
        )
    massless = matrixlab.solve_case1(
        PhysicalParams(m=0.0, c=1.0), np.array([[2.0, 0.5], [0.5, 1.0]], dtype=complex)
    )
    weyl_exact = np.allclose(
        massless.U, matrixlab.massless_weyl_unitary(), atol=1e-14
    )
    _report(
        7,
        "magnetostatic case: 100 random blocks within 1e-10, massless limit is the "
        "chirality rotation",
        worst_off <= 1e-10 and worst_match <= 1e-10 and weyl_exact,
        f"max offdiag {worst_off:.2e}, max block err {worst_match:.2e}",
    )


def test_criterion_08_case2_blocks():
    params = PhysicalParams(m=1.0, c=1.0, q=0.0, hbar=1.0, mu_prime=0.3)
    rng = np.random.default_rng(8)
    worst_off = worst_match = 0.0
    done = 0
    while done < 100:
        p = rng.uniform(-1, 1, 3)
        E = rng.uniform(-1, 1, 3)
        try:
            result = matrixlab.solve_case2(params, p, E)
        except ValueError:
            continue
        done += 1
        want = matrixlab.case2_closed_form(params, p, E)
        worst_off = max(worst_off, result.offdiag_norm / np.linalg.norm(result.H))
        worst_match = max(
            worst_match,
            np.linalg.norm(result.upper_block - want) / np.linalg.norm(want),
        )
    _report(
        8,
        "electrostatic moment case: 100 random samples within 1e-10",
        worst_off <= 1e-10 and worst_match <= 1e-10,
        f"max offdiag {worst_off:.2e}, max block err {worst_match:.2e}",
    )


def test_criterion_09_classical_correspondence():
    rng = np.random.default_rng(9)
    worst = 0.0
    checked = 0
    for _ in range(500):
        point = FieldPoint(
            pi=tuple(rng.uniform(-0.9, 0.9, 3)),
            E=tuple(rng.uniform(-1e-3, 1e-3, 3)),
            B=tuple(rng.uniform(-1e-3, 1e-3, 3)),
            phi=float(rng.uniform(-0.2, 0.2)),
        )
        matrix = calHFW_closed(PARAMS, point)
        n_hat, _ = spin_splitting(PARAMS, point)
        if n_hat is None:
            continue
        checked += 1
        eigs = np.linalg.eigvalsh(matrix)
        spin = PARAMS.hbar / 2 * n_hat
        low, high = classical_H(PARAMS, point, spin), classical_H(PARAMS, point, -spin)
        worst = max(
            worst,
            abs(eigs[0] - low) / abs(low),
            abs(eigs[1] - high) / abs(high),
        )
    _report(
        9,
        "eigenvalues equal the classical Hamiltonian at s = +-hbar/2 n",
        checked >= 500 * 0.99 and worst <= 1e-9,
        f"{checked} points, worst rel diff {worst:.2e}",
    )


def test_criterion_10_charge_conjugation():
    cal = ktz.assemble_calHFW(30)
    bar = ktz.lower_block(30)
    mirrored = ktz.charge_conjugated(cal)
    symbolic = all(bar.orders[n] == mirrored.orders[n] for n in range(31))

    units = PARAMS.units()
    flipped = dict(units, q=-units["q"], mu=-units["mu"])
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(50):
        pi = rng.uniform(-0.5, 0.5, 3)
        E = rng.uniform(-1e-3, 1e-3, 3)
        B = rng.uniform(-1e-3, 1e-3, 3)
        phi = float(rng.uniform(-0.1, 0.1))
        lower = ktz.eval_hamiltonian(bar, units, pi, E, B, phi=phi, max_order=30)
        image = -ktz.eval_hamiltonian(
            cal, flipped, -pi, E, B, phi=phi, flip_sigma=True, max_order=30
        )
        worst = max(worst, np.linalg.norm(lower - image) / np.linalg.norm(lower))
    _report(
        10,
        "lower block equals the conjugated upper block, exactly and numerically",
        symbolic and worst <= 1e-10,
        f"numeric worst {worst:.2e}",
    )


def test_criterion_11_gaussian_integral_cross_check():
    rng = np.random.default_rng(11)
    worst = 0.0
    samples = [3.0 * np.eye(2)]
    for _ in range(10):
        raw = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        herm = (raw + raw.conj().T) / 2
        samples.append(herm @ herm)
    for A in samples:
        got = matrixlab.gaussian_invsqrt(A)
        want = matrixlab.hermitian_inv_sqrt(np.eye(2) + A)
        worst = max(worst, np.linalg.norm(got - want))
    _report(
        11,
        "Gaussian-integral inverse square root matches spectral to 1e-8",
        worst <= 1e-8,
        f"worst {worst:.2e} incl. spectrum norm 3",
    )
