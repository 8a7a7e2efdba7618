"""Command-line front end.

Exit codes: 0 on success, 1 when a verification contract fails, 2 for usage
errors.  All output is deterministic for a fixed (command line, seed) pair.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import gap as gap_mod
from . import spectrum, spinham
from .lattice import build_torus, torus_to_dict

BLOCH_TOL = 1e-8
ALGEBRA_TOL = 1e-12


def _parse_floats(text: str, what: str) -> np.ndarray:
    try:
        return np.array([float(x) for x in text.split(",") if x.strip() != ""])
    except ValueError:
        raise ValueError(f"could not parse {what} list {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_bands(args) -> int:
    J = _parse_floats(args.J, "--J")
    spectrum.as_couplings(J, d=args.d)
    t = _parse_floats(args.t, "--t") if args.t else None
    lines = list(spectrum.band_csv_lines(J, args.grid, hoppings=t))
    if args.format == "json":
        cols = lines[0].split(",")
        rows = [[float(v) for v in ln.split(",")] for ln in lines[1:]]
        _emit(json.dumps({"columns": cols, "rows": rows}, indent=2) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_gap(args) -> int:
    J = _parse_floats(args.J, "--J")
    spectrum.as_couplings(J, d=args.d)
    report = gap_mod.gap_report(J, grid_n=args.grid)
    payload = {
        "has_zero": report.has_zero,
        "margin": report.margin,
        "zero_phi": None if report.zero_phi is None else list(report.zero_phi),
        "min_numeric": report.min_numeric,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_gapmap(args) -> int:
    lines = gap_mod.gapmap_csv_lines(args.d, args.resolution)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_lattice(args) -> int:
    torus = build_torus(args.d, args.N)
    _emit(json.dumps(torus_to_dict(torus), indent=2) + "\n", args.out)
    return 0


def _sweep_deviation(torus, J, corrupt: bool) -> float:
    A = spectrum.quadratic_form(torus, J)
    if corrupt:
        e = torus.edges[0]
        A[e.frm, e.to] *= -1.0
        A[e.to, e.frm] *= -1.0
    matrix_eigs = spectrum.majorana_spectrum(A)
    grid_eigs = spectrum.bloch_multiset(J, torus.N)
    return float(np.abs(matrix_eigs - grid_eigs).max())


def cmd_verify(args) -> int:
    torus = build_torus(args.d, args.N)
    rng = np.random.default_rng(args.seed)
    failures = []
    max_dev = 0.0
    draws_J = []
    for k in range(args.draws):
        J = rng.uniform(-2.0, 2.0, size=args.d + 1)
        draws_J.append(J)
        dev = _sweep_deviation(torus, J, corrupt=args.corrupt_sign)
        max_dev = max(max_dev, dev)
        if not dev < BLOCH_TOL:
            failures.append(
                {"draw": k, "d": args.d, "N": args.N, "seed": args.seed,
                 "J": list(J), "deviation": dev}
            )
    operator_suite = None
    algebra_torus = None
    for candidate_N in (args.N, 1):
        try:
            spinham.tensor_dims(build_torus(args.d, candidate_N), spinham.DEFAULT_DIM_CAP)
            algebra_torus = build_torus(args.d, candidate_N)
            break
        except ValueError:
            continue
    if algebra_torus is not None and draws_J:
        system = spinham.build_spin_hamiltonian(algebra_torus, draws_J[0])
        operator_suite = verify_ops_payload(system)
        if not operator_suite["pass"]:
            failures.append(
                {"suite": "operator-identities", "d": args.d,
                 "N": algebra_torus.N, "seed": args.seed, "J": list(draws_J[0])}
            )
    payload = {
        "d": args.d,
        "N": args.N,
        "draws": args.draws,
        "seed": args.seed,
        "bloch_tolerance": BLOCH_TOL,
        "max_deviation": max_dev,
        "operator_suite": operator_suite,
        "failures": failures,
        "pass": not failures,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if not failures else 1


def verify_ops_payload(system) -> dict:
    report = spinham.verify_operator_identities(system)
    ok = (
        report["max_residual"] < ALGEBRA_TOL
        and report["links_exact_pm_one"]
        and report["parity_diagonal_pm_one"]
    )
    return {**report, "tolerance": ALGEBRA_TOL, "pass": bool(ok)}


def cmd_verify_algebra(args) -> int:
    torus = build_torus(args.d, args.N)
    if args.J:
        J = _parse_floats(args.J, "--J")
        spectrum.as_couplings(J, d=args.d)
    else:
        J = np.random.default_rng(args.seed).uniform(-2.0, 2.0, size=args.d + 1)
    system = spinham.build_spin_hamiltonian(torus, J)
    payload = verify_ops_payload(system)
    payload.update({"d": args.d, "N": args.N, "J": list(J)})
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if payload["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kitaev-diamond",
        description="Band structure and operator algebra of Kitaev-type models "
        "on d-dimensional diamond lattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, need_J=False, N=None, grid=None):
        p.add_argument("--d", type=int, required=True, help="lattice dimension")
        if need_J:
            p.add_argument("--J", type=str, required=True,
                           help="comma-separated couplings J_1,...,J_{d+1}")
        if N is not None:
            p.add_argument("--N", type=int, default=N, help="torus size per axis")
        if grid is not None:
            p.add_argument("--grid", type=int, default=grid,
                           help="phase-grid points per axis")
        p.add_argument("--out", type=str, default=None, help="output file (default stdout)")

    p = sub.add_parser("bands", help="band table over the phase grid (CSV)")
    common(p, need_J=True, grid=64)
    p.add_argument("--t", type=str, default=None,
                   help="comma-separated hoppings t_1,...,t_{d+1} for extra tight-binding columns")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_bands)

    p = sub.add_parser("gap", help="gap classification report (JSON)")
    common(p, need_J=True, grid=48)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("gapmap", help="classify the coupling simplex on a rational grid (CSV)")
    common(p)
    p.add_argument("--resolution", type=int, default=40,
                   help="barycentric denominator of the simplex grid")
    p.set_defaults(func=cmd_gapmap)

    p = sub.add_parser("lattice", help="torus graph with embedded positions (JSON)")
    common(p, N=2)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify", help="spectral equivalence sweep plus operator identities")
    common(p, N=2)
    p.add_argument("--draws", type=int, default=20, help="random coupling draws")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--corrupt-sign", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-algebra", help="operator-identity residual report (JSON)")
    common(p, N=1)
    p.add_argument("--J", type=str, default=None,
                   help="comma-separated couplings (default: one seeded random draw)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.set_defaults(func=cmd_verify_algebra)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
