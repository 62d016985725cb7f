"""Batch verification front-end.

Subcommands::

    expand        print generator-series orders (optionally against goldens)
    verify        theorems, identities, hermiticity, commutation lemmas
    special-case  exact 4x4 block diagonalization checks
    sweep         classical-comparison and series-convergence CSV
    report        the full battery, one JSON document

Configuration may come from a TOML file with one flat section per subcommand;
command-line flags override file values.  Relative output paths are resolved
against ``$FWBLOCK_OUTPUT_DIR`` when it is set.  Exit codes: 0 all checks
pass, 1 verification failure, 2 usage or configuration error.  Reports are
deterministic: identical configuration and seed produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

import numpy as np

from . import coeffs, golden, kutzelnigg as ktz, matrixlab
from .algebra import to_json_terms, render
from .closedform import (
    FieldPoint,
    PhysicalParams,
    calHFW_closed,
    classical_H,
    conjectured_inhomogeneous_report,
    sigma_dot,
    spin_splitting,
)

SCHEMA_VERSION = 1
MAX_ORDER = 61


class ConfigError(Exception):
    pass


class VerificationFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# configuration plumbing
# ---------------------------------------------------------------------------


def _load_config(path: str | None, section: str) -> dict:
    if not path:
        return {}
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    raw = data.get(section, {})
    if not isinstance(raw, dict):
        raise ConfigError(f"config section [{section}] must be a table")
    return {key.replace("-", "_"): value for key, value in raw.items()}


def _merged(args: argparse.Namespace, section: str, defaults: dict) -> dict:
    cfg = dict(defaults)
    cfg.update(_load_config(getattr(args, "config", None), section))
    for key in defaults:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _check_order(order: int, minimum: int = 1) -> int:
    order = int(order)
    if order < minimum:
        raise ConfigError(f"order must be >= {minimum}")
    if order > MAX_ORDER:
        raise ConfigError(f"order must be <= {MAX_ORDER} (runtime guard)")
    return order


def _check_tolerance(value: float, name: str) -> float:
    value = float(value)
    if value <= 0:
        raise ConfigError(f"{name} must be positive")
    return value


def _resolve_output(path: str | None):
    if not path:
        return None
    base = os.environ.get("FWBLOCK_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    return path


def _emit(text: str, path: str | None) -> None:
    path = _resolve_output(path)
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write output {path}: {exc}") from exc


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _params_from(cfg: dict) -> PhysicalParams:
    return PhysicalParams(
        m=float(cfg.get("mass", 1.0)),
        c=float(cfg.get("speed_of_light", 1.0)),
        q=float(cfg.get("charge", 0.7)),
        hbar=float(cfg.get("hbar", 1.0)),
        mu_prime=float(cfg.get("mu_prime", 8e-4)),
    )


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------


def cmd_expand(args) -> int:
    cfg = _merged(
        args,
        "expand",
        {
            "theory": "dirac",
            "order": None,
            "golden": False,
            "format": "json",
            "output": None,
        },
    )
    if cfg["order"] is None:
        raise ConfigError("expand needs --order")
    order = _check_order(cfg["order"])
    theory = cfg["theory"]
    if theory not in ("dirac", "dirac-pauli"):
        raise ConfigError("theory must be 'dirac' or 'dirac-pauli'")
    if cfg["format"] not in ("json", "csv", "text"):
        raise ConfigError("format must be json, csv, or text")

    if theory == "dirac":
        series = ktz.dirac_series(order)
        golden_orders = [n for n in golden.golden_dirac_orders() if n <= order]
        golden_entry = golden.golden_dirac
    else:
        series = ktz.pauli_series(order)
        golden_orders = [n for n in golden.golden_pauli_orders() if n <= order]
        golden_entry = golden.golden_pauli

    mismatches = []
    if cfg["golden"]:
        for n in golden_orders:
            if series.entry(n) != golden_entry(n):
                mismatches.append(n)

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "expand",
        "theory": theory,
        "order": order,
        "orders": [
            {"order": n, "terms": to_json_terms(series.entry(n))}
            for n in range(1, order + 1)
        ],
    }
    if cfg["golden"]:
        payload["golden"] = {
            "checked_orders": golden_orders,
            "mismatched_orders": mismatches,
            "pass": not mismatches,
        }

    if cfg["format"] == "json":
        _emit(_json_text(payload), cfg["output"])
    elif cfg["format"] == "text":
        lines = [f"{theory} series through order {order}"]
        for n in range(1, order + 1):
            lines.append(f"  [{n:2d}]  {render(series.entry(n))}")
        if cfg["golden"]:
            lines.append(f"golden: {'pass' if not mismatches else f'MISMATCH at {mismatches}'}")
        _emit("\n".join(lines), cfg["output"])
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(
            ["order", "coeff_re", "coeff_im", "m", "c", "hbar", "q", "mu", "tail", "field", "k"]
        )
        for n in range(1, order + 1):
            for rec in to_json_terms(series.entry(n)):
                grade = rec["grade"]
                writer.writerow(
                    [
                        n,
                        rec["coeff_re"],
                        rec["coeff_im"],
                        grade["m"],
                        grade["c"],
                        grade["hbar"],
                        grade["q"],
                        grade["mu"],
                        rec["tail"],
                        rec["field"] or "",
                        rec["k"],
                    ]
                )
        _emit(buffer.getvalue(), cfg["output"])
    return 1 if mismatches else 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_theorems(order: int) -> dict:
    x = ktz.dirac_series(order)
    failures = [
        n
        for n in range(1, order + 1)
        if x.entry(n) != ktz.theorem_closed_form(ktz.Theorem.T1, n)
    ]
    xp = ktz.pauli_series(order)
    failures_prime = [
        n
        for n in range(2, order + 1)
        if xp.entry(n) != ktz.theorem_closed_form(ktz.Theorem.T2, n)
    ]
    return {
        "orders_checked": order,
        "generator_failures": failures,
        "moment_generator_failures": failures_prime,
        "pass": not failures and not failures_prime,
    }


def _verify_identities(j_max: int, include_records: bool = False) -> dict:
    result = coeffs.verify_all_identities(j_max)
    failing = [r for r in result["records"] if not r["pass"]]
    summary = {
        "j_max": j_max,
        "checked": len(result["records"]),
        "failures": len(failing),
        "pass": result["passed"],
    }
    if include_records:
        summary["records"] = result["records"]
    if failing:
        first = failing[0]
        summary["first_failure"] = {"identity": first["identity"], "j": first["j"]}
    return summary


def _verify_hamiltonian(order: int) -> dict:
    h = ktz.assemble_HFW(order)
    cal = ktz.assemble_calHFW(order)
    bar = ktz.lower_block(order)
    mirrored = ktz.charge_conjugated(cal)
    antihermitian = [
        n
        for n in range(order + 1)
        if h.orders[n].antihermitian_part() or cal.orders[n].antihermitian_part()
    ]
    series_mismatch = [
        n
        for n in range(order + 1)
        if h.orders[n] != ktz.hfw_series_order(n)
        or cal.orders[n] != ktz.hfw_series_order(n) + ktz.hprime_series_order(n)
    ]
    conjugation_mismatch = [
        n for n in range(order + 1) if bar.orders[n] != mirrored.orders[n]
    ]
    t = ktz.xdagx_series(order).entries
    x = ktz.dirac_series(order)
    lemma_breaks = []
    for n in range(min(order, 12)):
        a = ktz.mul(ktz.sigma_pi(), x.entry(n + 1))
        for k, t_k in t.items():
            if n + k <= order and ktz.mul(a, t_k) != ktz.mul(t_k, a):
                lemma_breaks.append((n, k))
    return {
        "orders_checked": order,
        "antihermitian_orders": antihermitian,
        "series_mismatch_orders": series_mismatch,
        "conjugation_mismatch_orders": conjugation_mismatch,
        "commutation_lemma_breaks": lemma_breaks,
        "pass": not (antihermitian or series_mismatch or conjugation_mismatch or lemma_breaks),
    }


def cmd_verify(args) -> int:
    cfg = _merged(
        args,
        "verify",
        {
            "order": 31,
            "jmax": 200,
            "theorems": False,
            "identities": False,
            "hermiticity": False,
            "inject_fault": False,
            "output": None,
        },
    )
    order = _check_order(cfg["order"])
    j_max = int(cfg["jmax"])
    if j_max < 1:
        raise ConfigError("jmax must be >= 1")
    run_all = not (cfg["theorems"] or cfg["identities"] or cfg["hermiticity"])

    payload = {"schema": SCHEMA_VERSION, "command": "verify"}
    ok = True
    if cfg["identities"] or run_all:
        include_records = bool(cfg["identities"])  # full per-j records on request
        if cfg["inject_fault"]:
            original = coeffs.b
            coeffs.b = lambda j, _orig=original: 10**6 if j == 7 else _orig(j)
            try:
                payload["identities"] = _verify_identities(j_max, include_records)
            finally:
                coeffs.b = original
            payload["identities"]["fault_injected"] = True
        else:
            payload["identities"] = _verify_identities(j_max, include_records)
        ok = ok and payload["identities"]["pass"]
    if cfg["theorems"] or run_all:
        payload["theorems"] = _verify_theorems(order)
        ok = ok and payload["theorems"]["pass"]
    if cfg["hermiticity"] or run_all:
        payload["hamiltonian"] = _verify_hamiltonian(min(order, 30))
        ok = ok and payload["hamiltonian"]["pass"]
    payload["pass"] = ok
    _emit(_json_text(payload), cfg["output"])
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# special cases
# ---------------------------------------------------------------------------


def _random_hermitian(generator, scale):
    raw = generator.normal(size=(2, 2)) + 1j * generator.normal(size=(2, 2))
    return scale * (raw + raw.conj().T) / 2.0


def _run_case1(params, trials, seed, tol_block, tol_unitary) -> dict:
    generator = np.random.default_rng(seed)
    worst_off = worst_unit = worst_match = 0.0
    for _ in range(trials):
        M = _random_hermitian(generator, generator.uniform(0.2, 3.0))
        result = matrixlab.solve_case1(params, M)
        h_norm = np.linalg.norm(result.H)
        want = matrixlab.hermitian_sqrt(
            params.m**2 * params.c**4 * np.eye(2) + M @ M
        )
        worst_off = max(worst_off, result.offdiag_norm / h_norm)
        worst_unit = max(worst_unit, result.unitarity_residual)
        worst_match = max(
            worst_match,
            np.linalg.norm(result.upper_block - want) / np.linalg.norm(want),
        )
    # fixed degenerate example: free particle
    free = matrixlab.solve_case1(params, params.c * sigma_dot((0.3, -0.2, 0.6)))
    worst_off = max(worst_off, free.offdiag_norm / np.linalg.norm(free.H))
    return {
        "trials": trials,
        "max_offdiag_rel": float(worst_off),
        "max_unitarity_residual": float(worst_unit),
        "max_block_mismatch_rel": float(worst_match),
        "pass": bool(
            worst_off <= tol_block and worst_unit <= tol_unitary and worst_match <= tol_block
        ),
    }


def _run_case2(params, trials, seed, tol_block, tol_unitary) -> dict:
    generator = np.random.default_rng(seed)
    worst_off = worst_unit = worst_match = 0.0
    done = 0
    skipped = 0
    while done < trials:
        p = generator.uniform(-1.0, 1.0, 3)
        E = generator.uniform(-1.0, 1.0, 3)
        try:
            result = matrixlab.solve_case2(params, p, E)
        except ValueError:
            skipped += 1
            if skipped > 10 * trials:
                raise VerificationFailure("could not sample invertible Omega")
            continue
        done += 1
        want = matrixlab.case2_closed_form(params, p, E)
        worst_off = max(worst_off, result.offdiag_norm / np.linalg.norm(result.H))
        worst_unit = max(worst_unit, result.unitarity_residual)
        worst_match = max(
            worst_match,
            np.linalg.norm(result.upper_block - want) / np.linalg.norm(want),
        )
    doublet = matrixlab.solve_case2(params, (0, 0, 0), (0, 0, 0.8))
    want = np.sqrt(params.m**2 * params.c**4 + params.mu_prime**2 * 0.64) * np.eye(2)
    worst_match = max(worst_match, np.linalg.norm(doublet.upper_block - want))
    return {
        "trials": trials,
        "singular_skipped": skipped,
        "max_offdiag_rel": float(worst_off),
        "max_unitarity_residual": float(worst_unit),
        "max_block_mismatch_rel": float(worst_match),
        "pass": bool(
            worst_off <= tol_block and worst_unit <= tol_unitary and worst_match <= tol_block
        ),
    }


def _run_massless() -> dict:
    params = PhysicalParams(m=0.0, c=1.0)
    M = np.array([[2.0, 0.5], [0.5, 1.0]], dtype=complex)
    result = matrixlab.solve_case1(params, M)
    weyl = matrixlab.massless_weyl_unitary()
    deviation = float(np.linalg.norm(result.U - weyl))
    return {
        "unitary": [[f"{val:.6f}" for val in row] for row in np.real_if_close(result.U)],
        "weyl_deviation": deviation,
        "pass": bool(deviation <= 1e-12),
    }


def _run_conjugation(params, trials, seed, order, tol) -> dict:
    generator = np.random.default_rng(seed)
    cal = ktz.assemble_calHFW(order)
    bar = ktz.lower_block(order)
    units = params.units()
    flipped_units = dict(units)
    flipped_units["q"] = -units["q"]
    flipped_units["mu"] = -units["mu"]
    worst = 0.0
    for _ in range(trials):
        pi = generator.uniform(-0.5, 0.5, 3)
        E = generator.uniform(-1e-3, 1e-3, 3)
        B = generator.uniform(-1e-3, 1e-3, 3)
        phi = float(generator.uniform(-0.1, 0.1))
        lower = ktz.eval_hamiltonian(bar, units, pi, E, B, phi=phi)
        # the electrostatic marker keeps its sign: one flip from q, one from
        # the overall minus
        mirrored = -ktz.eval_hamiltonian(
            cal, flipped_units, -pi, E, B, phi=phi, flip_sigma=True
        )
        worst = max(worst, float(np.linalg.norm(lower - mirrored) / np.linalg.norm(lower)))
    symbolic = all(
        bar.orders[n] == ktz.charge_conjugated(cal).orders[n] for n in range(order + 1)
    )
    return {
        "trials": trials,
        "series_order": order,
        "max_numeric_mismatch_rel": float(worst),
        "symbolic_pass": bool(symbolic),
        "pass": bool(symbolic and worst <= tol),
    }


def cmd_special_case(args) -> int:
    cfg = _merged(
        args,
        "special-case",
        {
            "case": None,
            "trials": 100,
            "seed": 7,
            "tolerance": 1e-10,
            "unitarity_tolerance": 1e-12,
            "singular_omega": False,
            "output": None,
        },
    )
    case = str(cfg["case"]) if cfg["case"] is not None else None
    if case not in ("1", "2", "massless", "conjugation"):
        raise ConfigError("case must be one of 1, 2, massless, conjugation")
    trials = int(cfg["trials"])
    if trials < 1:
        raise ConfigError("trials must be >= 1")
    tol = _check_tolerance(cfg["tolerance"], "tolerance")
    tol_unitary = _check_tolerance(cfg["unitarity_tolerance"], "unitarity_tolerance")
    seed = int(cfg["seed"])

    charged = PhysicalParams(m=1.0, c=1.0, q=0.5, hbar=1.0)
    neutral = PhysicalParams(m=1.0, c=1.0, q=0.0, hbar=1.0, mu_prime=0.3)

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "special-case",
        "case": case,
        "seed": seed,
        "tolerances": {"block": tol, "unitarity": tol_unitary},
    }
    if case == "2" and cfg["singular_omega"]:
        p_mag = neutral.mu_prime / neutral.c
        try:
            matrixlab.solve_case2(neutral, (p_mag, 0, 0), (0, 0, 1.0))
        except ValueError as exc:
            payload["diagnostic"] = str(exc)
            payload["pass"] = False
            _emit(_json_text(payload), cfg["output"])
            return 1
        payload["diagnostic"] = "expected singular Omega was not detected"
        payload["pass"] = False
        _emit(_json_text(payload), cfg["output"])
        return 1

    if case == "1":
        payload["result"] = _run_case1(charged, trials, seed, tol, tol_unitary)
    elif case == "2":
        payload["result"] = _run_case2(neutral, trials, seed, tol, tol_unitary)
    elif case == "massless":
        payload["result"] = _run_massless()
    else:
        mu_params = _params_from(cfg)
        payload["result"] = _run_conjugation(mu_params, trials, seed, 20, tol)
    payload["pass"] = payload["result"]["pass"]
    _emit(_json_text(payload), cfg["output"])
    return 0 if payload["pass"] else 1


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def cmd_sweep(args) -> int:
    cfg = _merged(
        args,
        "sweep",
        {
            "grid_start": 0.0,
            "grid_stop": 1.2,
            "grid_step": 0.05,
            "orders": "10,20,30",
            "classical_compare": False,
            "seed": 7,
            "output": None,
        },
    )
    start, stop, step = float(cfg["grid_start"]), float(cfg["grid_stop"]), float(cfg["grid_step"])
    if step <= 0 or stop < start:
        raise ConfigError("empty grid: need grid_step > 0 and grid_stop >= grid_start")
    ratios = []
    value = start
    while value <= stop + 1e-12:
        ratios.append(round(value, 12))
        value += step
    if not ratios:
        raise ConfigError("empty grid")
    orders = tuple(int(x) for x in str(cfg["orders"]).split(",") if x.strip())
    if not orders or max(orders) > MAX_ORDER:
        raise ConfigError(f"orders must be nonempty and <= {MAX_ORDER}")

    params = _params_from(cfg)
    generator = np.random.default_rng(int(cfg["seed"]))
    E = tuple(float(v) for v in generator.uniform(-1e-3, 1e-3, 3))
    B = tuple(float(v) for v in generator.uniform(-1e-3, 1e-3, 3))
    direction = generator.normal(size=3)
    direction = tuple(float(v) for v in direction / np.linalg.norm(direction))

    rows = matrixlab.series_vs_closed_sweep(
        params, ratios, orders=orders, E=E, B=B, direction=direction
    )

    buffer = io.StringIO()
    fieldnames = ["pi_over_mc", "E_x", "E_y", "E_z", "B_x", "B_y", "B_z"]
    if cfg["classical_compare"]:
        fieldnames += [
            "eigenvalue_plus",
            "eigenvalue_minus",
            "classical_plus",
            "classical_minus",
            "abs_diff",
        ]
    fieldnames += [f"rel_err_order_{order}" for order in orders]
    writer = csv.DictWriter(buffer, fieldnames=fieldnames)
    writer.writeheader()
    for row in rows:
        ratio = row["pi_over_mc"]
        record = {
            "pi_over_mc": repr(ratio),
            "E_x": repr(E[0]),
            "E_y": repr(E[1]),
            "E_z": repr(E[2]),
            "B_x": repr(B[0]),
            "B_y": repr(B[1]),
            "B_z": repr(B[2]),
        }
        if cfg["classical_compare"]:
            pi_vec = tuple(ratio * params.m * params.c * np.asarray(direction))
            point = FieldPoint(pi=pi_vec, E=E, B=B)
            matrix = calHFW_closed(params, point)
            eigs = np.linalg.eigvalsh(matrix)
            n_hat, _ = spin_splitting(params, point)
            if n_hat is None:
                classical = (eigs[1], eigs[0])
            else:
                spin = params.hbar / 2 * n_hat
                classical = (classical_H(params, point, -spin), classical_H(params, point, spin))
            record["eigenvalue_plus"] = repr(float(eigs[1]))
            record["eigenvalue_minus"] = repr(float(eigs[0]))
            record["classical_plus"] = repr(float(classical[0]))
            record["classical_minus"] = repr(float(classical[1]))
            record["abs_diff"] = repr(
                float(
                    max(
                        abs(eigs[1] - classical[0]),
                        abs(eigs[0] - classical[1]),
                    )
                )
            )
        for order in orders:
            record[f"rel_err_order_{order}"] = repr(row[f"rel_err_order_{order}"])
        writer.writerow(record)
    _emit(buffer.getvalue(), cfg["output"])
    return 0


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


def cmd_report(args) -> int:
    cfg = _merged(
        args,
        "report",
        {"order": 20, "jmax": 120, "trials": 30, "seed": 7, "output": None},
    )
    order = _check_order(cfg["order"])
    trials = int(cfg["trials"])
    seed = int(cfg["seed"])
    charged = PhysicalParams(m=1.0, c=1.0, q=0.5, hbar=1.0)
    neutral = PhysicalParams(m=1.0, c=1.0, q=0.0, hbar=1.0, mu_prime=0.3)
    moment = _params_from(cfg)

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "report",
        "identities": _verify_identities(int(cfg["jmax"])),
        "theorems": _verify_theorems(order),
        "hamiltonian": _verify_hamiltonian(order),
        "case1": _run_case1(charged, trials, seed, 1e-10, 1e-12),
        "case2": _run_case2(neutral, trials, seed, 1e-10, 1e-12),
        "massless": _run_massless(),
        "conjugation": _run_conjugation(moment, trials, seed, order, 1e-10),
        "conjecture": conjectured_inhomogeneous_report(
            moment, FieldPoint(pi=(0.2, 0.0, 0.1)), div_E=0.0
        ),
    }
    sections = ["identities", "theorems", "hamiltonian", "case1", "case2", "massless", "conjugation"]
    payload["pass"] = all(payload[name]["pass"] for name in sections)
    _emit(_json_text(payload), cfg["output"])
    return 0 if payload["pass"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwblock",
        description="exact verification suite for relativistic block diagonalization",
    )
    parser.add_argument("--config", help="TOML configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="print generator series orders")
    p_expand.add_argument("--theory", choices=["dirac", "dirac-pauli"])
    p_expand.add_argument("--order", type=int)
    p_expand.add_argument("--golden", action="store_const", const=True)
    p_expand.add_argument("--format", choices=["json", "csv", "text"])
    p_expand.add_argument("--output")
    p_expand.set_defaults(func=cmd_expand)

    p_verify = sub.add_parser("verify", help="run symbolic verification checks")
    p_verify.add_argument("--order", type=int)
    p_verify.add_argument("--jmax", type=int)
    p_verify.add_argument("--theorems", action="store_const", const=True)
    p_verify.add_argument("--identities", action="store_const", const=True)
    p_verify.add_argument("--hermiticity", action="store_const", const=True)
    p_verify.add_argument(
        "--inject-fault",
        action="store_const",
        const=True,
        dest="inject_fault",
        help="test hook: corrupt one coefficient to exercise the failure path",
    )
    p_verify.add_argument("--output")
    p_verify.set_defaults(func=cmd_verify)

    p_case = sub.add_parser("special-case", help="exact 4x4 block checks")
    p_case.add_argument("case", nargs="?", choices=["1", "2", "massless", "conjugation"])
    p_case.add_argument("--trials", type=int)
    p_case.add_argument("--seed", type=int)
    p_case.add_argument("--tolerance", type=float)
    p_case.add_argument("--unitarity-tolerance", type=float, dest="unitarity_tolerance")
    p_case.add_argument(
        "--singular-omega", action="store_const", const=True, dest="singular_omega"
    )
    p_case.add_argument("--output")
    p_case.set_defaults(func=cmd_special_case)

    p_sweep = sub.add_parser("sweep", help="classical-comparison / convergence CSV")
    p_sweep.add_argument("--grid-start", type=float, dest="grid_start")
    p_sweep.add_argument("--grid-stop", type=float, dest="grid_stop")
    p_sweep.add_argument("--grid-step", type=float, dest="grid_step")
    p_sweep.add_argument("--orders")
    p_sweep.add_argument(
        "--classical-compare", action="store_const", const=True, dest="classical_compare"
    )
    p_sweep.add_argument("--seed", type=int)
    p_sweep.add_argument("--output")
    p_sweep.set_defaults(func=cmd_sweep)

    p_report = sub.add_parser("report", help="full verification battery as JSON")
    p_report.add_argument("--order", type=int)
    p_report.add_argument("--jmax", type=int)
    p_report.add_argument("--trials", type=int)
    p_report.add_argument("--seed", type=int)
    p_report.add_argument("--output")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
