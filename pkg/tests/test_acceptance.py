"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s -v`` to see every line. Each check
carries its stated tolerance and runtime budget.
"""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from rindlerqi import (
    U_INFINITE,
    BellFamily,
    BellState,
    QubitState,
    average_fidelity,
    branch_probability,
    fidelity_closed_form,
    negativity,
    negativity_closed_form,
    negativity_limit,
    reduced_rho,
    run_protocol,
)
from rindlerqi.cli import main, theta_rows
from rindlerqi.entanglement import AccelerationLimit

SQRT_HALF = 1 / math.sqrt(2)
PAIRS = [(SQRT_HALF, SQRT_HALF), (0.6, 0.8), (0.96, 0.28)]
QUBITS = [
    QubitState(1.0, 0.0),
    QubitState(SQRT_HALF, SQRT_HALF),
    QubitState(0.6, 0.8),
    QubitState(0.28, 0.96j),
]
GOLDEN_DIR = Path(__file__).parent / "golden"


def report(number, label, ok, detail, elapsed, budget):
    status = "PASS" if ok else "FAIL"
    print(f"\nacceptance {number:02d} {label}: {status} -- {detail} "
          f"[{elapsed:.2f}s / budget {budget:g}s]")
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"
    assert ok, f"criterion {number} ({label}): {detail}"


def test_criterion_01_negativity_limits():
    t0 = time.perf_counter()
    eq = (SQRT_HALF, SQRT_HALF)
    cases = [
        (BellFamily.PSI, 0.0, U_INFINITE, AccelerationLimit.BOB_INFINITE, 0.5),
        (BellFamily.PHI, 0.0, U_INFINITE, AccelerationLimit.BOB_INFINITE, 0.5),
        (BellFamily.PSI, U_INFINITE, U_INFINITE, AccelerationLimit.BOTH_INFINITE,
         (math.sqrt(2) - 1) / 2),
        (BellFamily.PHI, U_INFINITE, U_INFINITE, AccelerationLimit.BOTH_INFINITE, 0.25),
    ]
    worst = 0.0
    for family, ua, ub, limit, expected in cases:
        for value in (
            negativity_closed_form(family, *eq, ua, ub),
            negativity_limit(family, *eq, limit),
            negativity(reduced_rho(family, *eq, ua, ub), ("B_I",)),
        ):
            worst = max(worst, abs(value - expected))
    report(1, "negativity limits", worst < 1e-9,
           f"max deviation {worst:.2e} (tol 1e-9)", time.perf_counter() - t0, 1)


def test_criterion_02_negativity_oracle_equivalence():
    t0 = time.perf_counter()
    grid = np.linspace(0.0, U_INFINITE, 17)
    worst = 0.0
    for family in BellFamily:
        for alpha, beta in PAIRS:
            for ua in grid:
                for ub in grid:
                    closed = negativity_closed_form(family, alpha, beta, ua, ub)
                    generic = negativity(reduced_rho(family, alpha, beta, ua, ub), ("B_I",))
                    worst = max(worst, abs(closed - generic))
    report(2, "negativity closed form vs generic", worst < 1e-10,
           f"max |closed - generic| {worst:.2e} on 17x17x3x2 (tol 1e-10)",
           time.perf_counter() - t0, 5)


def test_criterion_03_perfect_inertial_teleportation():
    t0 = time.perf_counter()
    worst = 0.0
    for shared in BellState:
        for qubit in QUBITS:
            for outcome in run_protocol(qubit, shared, 0.0, 0.0):
                worst = max(worst, abs(outcome.fidelity - 1.0))
    report(3, "perfect inertial teleportation", worst < 1e-12,
           f"max |F - 1| {worst:.2e} over 16 combos x 4 qubits (tol 1e-12)",
           time.perf_counter() - t0, 1)


def test_criterion_04_fidelity_oracle_equivalence():
    t0 = time.perf_counter()
    grid = np.linspace(0.0, U_INFINITE, 9)
    worst_f = worst_p = 0.0
    for shared in BellState:
        for qubit in QUBITS:
            for ua in grid:
                for ub in grid:
                    for outcome in run_protocol(qubit, shared, ua, ub):
                        p_closed = branch_probability(outcome.result.family, qubit, ua)
                        f_closed = fidelity_closed_form(
                            shared.family, outcome.result.family, qubit, ua, ub
                        )
                        worst_p = max(worst_p, abs(outcome.probability - p_closed))
                        worst_f = max(worst_f, abs(outcome.fidelity - f_closed))
    report(4, "fidelity closed forms vs protocol", worst_f < 1e-10 and worst_p < 1e-12,
           f"max |F - closed| {worst_f:.2e} (tol 1e-10), "
           f"max |p - closed| {worst_p:.2e} (tol 1e-12); "
           "simulated Bob states confirm the cos^2(u_b) reading of the shared-phi "
           "psi-branch population",
           time.perf_counter() - t0, 10)


def test_criterion_05_headline_numbers():
    t0 = time.perf_counter()
    eq = QubitState(SQRT_HALF, SQRT_HALF)
    worst = 0.0
    for ua in np.linspace(0.0, U_INFINITE, 5):
        for ub in np.linspace(0.0, U_INFINITE, 5):
            expected = 0.5 * (1 + math.cos(ua) * math.cos(ub))
            for shared_family in BellFamily:
                for result_family in BellFamily:
                    value = fidelity_closed_form(shared_family, result_family, eq, ua, ub)
                    worst = max(worst, abs(value - expected))
    checks = [
        (fidelity_closed_form(BellFamily.PSI, BellFamily.PSI, eq, U_INFINITE, 0.0),
         (2 + math.sqrt(2)) / 4),
        (fidelity_closed_form(BellFamily.PSI, BellFamily.PSI, eq, U_INFINITE, U_INFINITE),
         0.75),
        (average_fidelity(BellFamily.PSI, QubitState(0.6, 0.8), U_INFINITE, U_INFINITE),
         0.7304),
    ]
    for qubit in QUBITS:
        checks.append(
            (average_fidelity(BellFamily.PHI, qubit, U_INFINITE, U_INFINITE), 0.75)
        )
    for value, expected in checks:
        worst = max(worst, abs(value - expected))
    report(5, "headline fidelity numbers", worst < 1e-9,
           f"max deviation {worst:.2e} (tol 1e-9)", time.perf_counter() - t0, 1)


def test_criterion_06_figure_orderings():
    t0 = time.perf_counter()
    qubit = QubitState(0.6, 0.8)
    interior = np.linspace(0.0, U_INFINITE, 11)[1:-1]
    ordering_ok = True
    phi_advantage_ok = True
    for ua in interior:
        for ub in interior:
            f1 = fidelity_closed_form(BellFamily.PSI, BellFamily.PSI, qubit, ua, ub)
            f2 = fidelity_closed_form(BellFamily.PSI, BellFamily.PHI, qubit, ua, ub)
            ordering_ok = ordering_ok and f1 > f2
            f_psi = average_fidelity(BellFamily.PSI, qubit, ua, ub)
            f_phi = average_fidelity(BellFamily.PHI, qubit, ua, ub)
            phi_advantage_ok = phi_advantage_ok and f_phi >= f_psi
    inertial_alice = max(
        abs(
            average_fidelity(BellFamily.PSI, qubit, 0.0, ub)
            - average_fidelity(BellFamily.PHI, qubit, 0.0, ub)
        )
        for ub in np.linspace(0.0, U_INFINITE, 9)
    )
    ok = ordering_ok and phi_advantage_ok and inertial_alice < 1e-12
    report(6, "figure orderings", ok,
           f"F1 > F2: {ordering_ok}, F_phi >= F_psi: {phi_advantage_ok}, "
           f"max |F_psi - F_phi| at u_a=0: {inertial_alice:.2e} (tol 1e-12)",
           time.perf_counter() - t0, 2)


def test_criterion_07_probability_completeness():
    t0 = time.perf_counter()
    worst_sum = 0.0
    worst_identity = 0.0
    for shared in BellState:
        for qubit in QUBITS:
            for ua in np.linspace(0.0, U_INFINITE, 5):
                outcomes = run_protocol(qubit, shared, ua, 0.31)
                worst_sum = max(worst_sum, abs(sum(o.probability for o in outcomes) - 1.0))
    for qubit in QUBITS:
        for ua in np.linspace(0.0, U_INFINITE, 17):
            p1 = branch_probability(BellFamily.PSI, qubit, ua)
            p2 = branch_probability(BellFamily.PHI, qubit, ua)
            worst_identity = max(worst_identity, abs(2 * p1 + 2 * p2 - 1.0))
    ok = worst_sum < 1e-12 and worst_identity < 1e-12
    report(7, "probability completeness", ok,
           f"max |sum p - 1| {worst_sum:.2e}, max |2p1 + 2p2 - 1| {worst_identity:.2e} "
           "(tol 1e-12)", time.perf_counter() - t0, 1)


def test_criterion_08_theta_scan_crossing_and_floor():
    t0 = time.perf_counter()
    _, rows = theta_rows(U_INFINITE, U_INFINITE, 65)
    mid = rows[32]  # theta = pi/4
    crossing_dev = max(abs(mid[k] - 0.75) for k in (1, 2, 3, 4))
    values = np.array([row[1:] for row in rows])
    minimum = float(values.min())
    arg = np.unravel_index(values.argmin(), values.shape)
    min_theta = rows[arg[0]][0]
    min_col = ("F1", "F2", "F3", "F4")[arg[1]]
    crossing_ok = crossing_dev < 1e-9
    floor_ok = minimum >= 0.5 - 1e-12
    report(8, "theta-scan crossing and floor", crossing_ok and floor_ok,
           f"crossing deviation {crossing_dev:.2e} (tol 1e-9); "
           f"minimum branch fidelity {minimum:.6f} ({min_col} at theta={min_theta:.4f}) "
           "vs required floor 0.5",
           time.perf_counter() - t0, 1)


def test_criterion_09_cli_determinism(tmp_path):
    t0 = time.perf_counter()
    cases = {
        "negativity.csv": ["negativity", "--family", "psi", "--alpha", "0.6",
                           "--beta", "0.8", "--grid", "3"],
        "fidelity.csv": ["fidelity", "--shared", "psi+", "--gamma", "0.6",
                         "--delta", "0.8", "--grid", "3"],
        "limits.json": ["limits", "--alpha", "0.6", "--beta", "0.8"],
        "theta_scan.csv": ["theta-scan", "--u-a", "0.5", "--u-b", "0.25", "--n", "5"],
    }
    repeat_ok = golden_ok = True
    for name, argv in cases.items():
        first = tmp_path / f"a_{name}"
        second = tmp_path / f"b_{name}"
        assert main(argv + ["--out", str(first)]) == 0
        assert main(argv + ["--out", str(second)]) == 0
        repeat_ok = repeat_ok and first.read_bytes() == second.read_bytes()
        golden_ok = golden_ok and first.read_bytes() == (GOLDEN_DIR / name).read_bytes()
    report(9, "CLI determinism and golden files", repeat_ok and golden_ok,
           f"repeat runs identical: {repeat_ok}, golden files match: {golden_ok}",
           time.perf_counter() - t0, 5)
