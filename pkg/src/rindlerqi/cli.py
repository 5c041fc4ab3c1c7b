"""Command-line front end: parameter sweeps, limit reports, figure data.

Subcommands
-----------
negativity   closed-form and numeric negativity on a (u_a, u_b) grid
fidelity     branch probabilities and fidelities, closed form and simulated
limits       every infinite-acceleration value, closed form vs generic route
theta-scan   the four branch fidelities against the teleported-state angle

Output is CSV (default) or JSON, written to stdout or ``--out``. CSV uses a
header row, comma separators, LF line endings and 12 significant digits;
JSON carries a ``meta`` object echoing the inputs plus a ``rows`` array.
Exit codes: 0 success, 2 bad flags, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

import numpy as np

from .entanglement import (
    AccelerationLimit,
    negativity,
    negativity_closed_form,
    negativity_limit,
    reduced_rho,
)
from .linalg import NumericalError
from .rindler import U_INFINITE, BellFamily, u_from_ratio
from .teleport import (
    BellState,
    QubitState,
    average_fidelity,
    average_fidelity_limit,
    branch_probability,
    fidelity_closed_form,
    run_protocol,
)

RENORMALIZE_WARN_TOL = 1e-9

_FAMILIES = {"psi": BellFamily.PSI, "phi": BellFamily.PHI}
_SHARED = {
    "psi+": BellState.PSI_PLUS,
    "psi-": BellState.PSI_MINUS,
    "phi+": BellState.PHI_PLUS,
    "phi-": BellState.PHI_MINUS,
}


# ---------------------------------------------------------------------------
# row builders (pure; the argparse layer below just wires flags to these)

def negativity_rows(family: BellFamily, alpha: complex, beta: complex, grid_n: int):
    """Grid of (u_a, u_b, N_closed, N_numeric), u_a outer, both ascending."""
    header = ["u_a", "u_b", "N_closed", "N_numeric"]
    grid = np.linspace(0.0, U_INFINITE, grid_n)
    rows = []
    for ua in grid:
        for ub in grid:
            closed = negativity_closed_form(family, alpha, beta, ua, ub)
            numeric = negativity(reduced_rho(family, alpha, beta, ua, ub), subsystem=("B_I",))
            rows.append([float(ua), float(ub), closed, numeric])
    return header, rows


def fidelity_rows(shared: BellState, qubit: QubitState, grid_n: int):
    """Closed-form and simulated branch data on a (u_a, u_b) grid.

    Branch-fidelity columns are F1/F2 for a shared psi pair and F3/F4 for a
    shared phi pair; each closed-form column has a ``_sim`` partner from the
    protocol simulation.
    """
    psi_labels = shared.family is BellFamily.PSI
    fa, fb = ("F1", "F2") if psi_labels else ("F3", "F4")
    header = [
        "u_a", "u_b", "p1", "p2", fa, fb, "F_avg",
        "p1_sim", "p2_sim", f"{fa}_sim", f"{fb}_sim", "F_avg_sim",
    ]
    grid = np.linspace(0.0, U_INFINITE, grid_n)
    rows = []
    for ua in grid:
        for ub in grid:
            p_psi = branch_probability(BellFamily.PSI, qubit, ua)
            p_phi = branch_probability(BellFamily.PHI, qubit, ua)
            f_psi = fidelity_closed_form(shared.family, BellFamily.PSI, qubit, ua, ub)
            f_phi = fidelity_closed_form(shared.family, BellFamily.PHI, qubit, ua, ub)
            f_avg = average_fidelity(shared.family, qubit, ua, ub)
            branches = {o.result: o for o in run_protocol(qubit, shared, ua, ub)}
            sim_psi = branches[BellState.PSI_PLUS]
            sim_phi = branches[BellState.PHI_PLUS]
            sim_avg = sum(
                o.probability * o.fidelity
                for o in branches.values()
                if o.fidelity is not None
            )
            rows.append([
                float(ua), float(ub), p_psi, p_phi, f_psi, f_phi, f_avg,
                sim_psi.probability, sim_phi.probability,
                sim_psi.fidelity, sim_phi.fidelity, sim_avg,
            ])
    return header, rows


def theta_rows(u_alice: float, u_bob: float, points: int):
    """The four branch fidelities for qubits amp0 = sin(theta), amp1 = cos(theta)."""
    header = ["theta", "F1", "F2", "F3", "F4"]
    rows = []
    for theta in np.linspace(0.0, math.pi / 2.0, points):
        qubit = QubitState(math.sin(theta), math.cos(theta))
        rows.append([
            float(theta),
            fidelity_closed_form(BellFamily.PSI, BellFamily.PSI, qubit, u_alice, u_bob),
            fidelity_closed_form(BellFamily.PSI, BellFamily.PHI, qubit, u_alice, u_bob),
            fidelity_closed_form(BellFamily.PHI, BellFamily.PSI, qubit, u_alice, u_bob),
            fidelity_closed_form(BellFamily.PHI, BellFamily.PHI, qubit, u_alice, u_bob),
        ])
    return header, rows


def limit_rows(alpha: complex, beta: complex, qubit: QubitState):
    """Every infinite-acceleration value, closed form against the generic route."""
    header = ["name", "closed_form", "generic", "abs_diff"]
    u_inf = U_INFINITE

    def generic_negativity(family, ua, ub):
        return negativity(reduced_rho(family, alpha, beta, ua, ub), subsystem=("B_I",))

    def simulated_average(shared):
        return sum(
            o.probability * o.fidelity
            for o in run_protocol(qubit, shared, u_inf, u_inf)
            if o.fidelity is not None
        )

    entries = [
        ("psi_bob_inf",
         negativity_limit(BellFamily.PSI, alpha, beta, AccelerationLimit.BOB_INFINITE),
         generic_negativity(BellFamily.PSI, 0.0, u_inf)),
        ("psi_both_inf",
         negativity_limit(BellFamily.PSI, alpha, beta, AccelerationLimit.BOTH_INFINITE),
         generic_negativity(BellFamily.PSI, u_inf, u_inf)),
        ("phi_bob_inf",
         negativity_limit(BellFamily.PHI, alpha, beta, AccelerationLimit.BOB_INFINITE),
         generic_negativity(BellFamily.PHI, 0.0, u_inf)),
        ("phi_both_inf",
         negativity_limit(BellFamily.PHI, alpha, beta, AccelerationLimit.BOTH_INFINITE),
         generic_negativity(BellFamily.PHI, u_inf, u_inf)),
        ("F_psi_inf",
         average_fidelity_limit(BellFamily.PSI, qubit),
         simulated_average(BellState.PSI_PLUS)),
        ("F_phi_inf",
         average_fidelity_limit(BellFamily.PHI, qubit),
         simulated_average(BellState.PHI_PLUS)),
    ]
    rows = [[name, closed, generic, abs(closed - generic)] for name, closed, generic in entries]
    return header, rows


# ---------------------------------------------------------------------------
# formatting

def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _emit(args, header, rows, meta) -> None:
    if args.format == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        payload = {"meta": meta, "rows": [dict(zip(header, row)) for row in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _parse_pair(parser, label0, mod0, phase0, label1, mod1, phase1):
    """Combine moduli and phases into a normalized complex pair."""
    first = mod0 * cmath.exp(1j * phase0)
    second = mod1 * cmath.exp(1j * phase1)
    scale = math.sqrt(abs(first) ** 2 + abs(second) ** 2)
    if scale == 0.0:
        parser.error(f"{label0} and {label1} cannot both be zero")
    if abs(scale - 1.0) > RENORMALIZE_WARN_TOL:
        print(
            f"warning: ({label0}, {label1}) norm deviates from 1 by {scale - 1.0:.3e}; "
            "renormalizing",
            file=sys.stderr,
        )
    return first / scale, second / scale


def _ratio_value(text: str) -> float:
    # the literal inf denotes infinite acceleration, i.e. frequency ratio 0
    if text.strip().lower() in ("inf", "infinity"):
        return 0.0
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"frequency ratio must be >= 0, got {value}")
    return value


def _u_value(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= U_INFINITE:
        raise argparse.ArgumentTypeError(f"u must lie in [0, pi/4], got {value}")
    return value


def _resolve_u(args, side: str) -> float:
    u = getattr(args, f"u_{side}")
    ratio = getattr(args, f"ratio_{side}")
    if u is not None and ratio is not None:
        raise argparse.ArgumentTypeError(f"give only one of --u-{side} / --ratio-{side}")
    if ratio is not None:
        return u_from_ratio(ratio)
    if u is not None:
        return u
    return U_INFINITE


# ---------------------------------------------------------------------------
# argparse wiring

def _add_output_flags(sub):
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="output path (default: stdout)")


def _add_grid_flag(sub):
    sub.add_argument("--grid", type=int, default=65, metavar="N",
                     help="grid points per axis over [0, pi/4] (2..1025, default 65)")


def _check_grid(parser, n):
    if not 2 <= n <= 1025:
        parser.error(f"--grid must lie in [2, 1025], got {n}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rindlerqi",
        description="Entanglement and teleportation of Dirac modes under acceleration.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    neg = commands.add_parser("negativity", help="negativity sweep over (u_a, u_b)")
    neg.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    neg.add_argument("--alpha", type=float, required=True, help="|alpha| of the pair state")
    neg.add_argument("--beta", type=float, required=True, help="|beta| of the pair state")
    neg.add_argument("--alpha-phase", type=float, default=0.0, metavar="RAD")
    neg.add_argument("--beta-phase", type=float, default=0.0, metavar="RAD")
    _add_grid_flag(neg)
    _add_output_flags(neg)
    neg.set_defaults(handler=_run_negativity)

    fid = commands.add_parser("fidelity", help="teleportation sweep over (u_a, u_b)")
    fid.add_argument("--shared", choices=sorted(_SHARED), required=True,
                     help="shared Bell resource")
    fid.add_argument("--gamma", type=float, required=True, help="|amp0| of the teleported qubit")
    fid.add_argument("--delta", type=float, required=True, help="|amp1| of the teleported qubit")
    fid.add_argument("--gamma-phase", type=float, default=0.0, metavar="RAD")
    fid.add_argument("--delta-phase", type=float, default=0.0, metavar="RAD")
    _add_grid_flag(fid)
    _add_output_flags(fid)
    fid.set_defaults(handler=_run_fidelity)

    lim = commands.add_parser("limits", help="all infinite-acceleration values")
    lim.add_argument("--alpha", type=float, default=None)
    lim.add_argument("--beta", type=float, default=None)
    lim.add_argument("--alpha-phase", type=float, default=0.0, metavar="RAD")
    lim.add_argument("--beta-phase", type=float, default=0.0, metavar="RAD")
    lim.add_argument("--gamma", type=float, default=None)
    lim.add_argument("--delta", type=float, default=None)
    lim.add_argument("--gamma-phase", type=float, default=0.0, metavar="RAD")
    lim.add_argument("--delta-phase", type=float, default=0.0, metavar="RAD")
    lim.set_defaults(format="json")
    lim.add_argument("--out", default=None, help="output path (default: stdout)")
    lim.set_defaults(handler=_run_limits)

    theta = commands.add_parser("theta-scan", help="branch fidelities vs qubit angle")
    theta.add_argument("--u-a", type=_u_value, default=None, metavar="RAD",
                       help="Alice's acceleration measure (default pi/4)")
    theta.add_argument("--u-b", type=_u_value, default=None, metavar="RAD",
                       help="Bob's acceleration measure (default pi/4)")
    theta.add_argument("--ratio-a", type=_ratio_value, default=None, metavar="X",
                       help="omega/a for Alice; 'inf' means infinite acceleration")
    theta.add_argument("--ratio-b", type=_ratio_value, default=None, metavar="X")
    theta.add_argument("--n", type=int, default=65, help="theta points on [0, pi/2] (>= 3)")
    _add_output_flags(theta)
    theta.set_defaults(handler=_run_theta)

    return parser


def _run_negativity(parser, args):
    _check_grid(parser, args.grid)
    alpha, beta = _parse_pair(
        parser, "alpha", args.alpha, args.alpha_phase, "beta", args.beta, args.beta_phase
    )
    header, rows = negativity_rows(_FAMILIES[args.family], alpha, beta, args.grid)
    meta = {
        "command": "negativity", "family": args.family,
        "alpha": abs(alpha), "alpha_phase": args.alpha_phase,
        "beta": abs(beta), "beta_phase": args.beta_phase, "grid": args.grid,
    }
    _emit(args, header, rows, meta)


def _run_fidelity(parser, args):
    _check_grid(parser, args.grid)
    gamma, delta = _parse_pair(
        parser, "gamma", args.gamma, args.gamma_phase, "delta", args.delta, args.delta_phase
    )
    qubit = QubitState(gamma, delta)
    header, rows = fidelity_rows(_SHARED[args.shared], qubit, args.grid)
    meta = {
        "command": "fidelity", "shared": args.shared,
        "gamma": abs(gamma), "gamma_phase": args.gamma_phase,
        "delta": abs(delta), "delta_phase": args.delta_phase, "grid": args.grid,
    }
    _emit(args, header, rows, meta)


def _run_limits(parser, args):
    have_ab = args.alpha is not None or args.beta is not None
    have_gd = args.gamma is not None or args.delta is not None
    if have_ab and (args.alpha is None or args.beta is None):
        parser.error("--alpha and --beta must be given together")
    if have_gd and (args.gamma is None or args.delta is None):
        parser.error("--gamma and --delta must be given together")
    if not have_ab and not have_gd:
        parser.error("give --alpha/--beta, --gamma/--delta, or both")
    if not have_ab:
        args.alpha, args.beta = args.gamma, args.delta
        args.alpha_phase, args.beta_phase = args.gamma_phase, args.delta_phase
    if not have_gd:
        args.gamma, args.delta = args.alpha, args.beta
        args.gamma_phase, args.delta_phase = args.alpha_phase, args.beta_phase
    alpha, beta = _parse_pair(
        parser, "alpha", args.alpha, args.alpha_phase, "beta", args.beta, args.beta_phase
    )
    gamma, delta = _parse_pair(
        parser, "gamma", args.gamma, args.gamma_phase, "delta", args.delta, args.delta_phase
    )
    header, rows = limit_rows(alpha, beta, QubitState(gamma, delta))
    meta = {
        "command": "limits",
        "alpha": abs(alpha), "alpha_phase": args.alpha_phase,
        "beta": abs(beta), "beta_phase": args.beta_phase,
        "gamma": abs(gamma), "gamma_phase": args.gamma_phase,
        "delta": abs(delta), "delta_phase": args.delta_phase,
    }
    args.format = "json"
    _emit(args, header, rows, meta)


def _run_theta(parser, args):
    if args.n < 3:
        parser.error(f"--n must be at least 3, got {args.n}")
    try:
        u_alice = _resolve_u(args, "a")
        u_bob = _resolve_u(args, "b")
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    header, rows = theta_rows(u_alice, u_bob, args.n)
    meta = {"command": "theta-scan", "u_a": u_alice, "u_b": u_bob, "n": args.n}
    _emit(args, header, rows, meta)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(parser, args)
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
