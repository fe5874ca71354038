"""
Command-line front end.

    gateflow {evolve|trajectory|bell|embed|endo} [flags]

Exit codes: 0 success, 2 unknown gate, 3 invalid argument.  The default
tolerance (1e-10) can be overridden with the ``GATEFLOW_TOL`` environment
variable.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import numerics as nx
from .bloch import TRAJECTORY_HEADER, gate_axis, latitude_residual, qubit_from_angles, sample_trajectory
from .endomorphism import basis_report
from .entanglement import BELL_HEADER, bell_csv, bell_path
from .errors import UnknownGateError
from .gates import catalog, gate_at_time
from .realspace import Convention, embed, is_complex_structure, is_special_orthogonal
from .serialize import csv_text, dumps, matrix_to_dict

EXIT_OK = 0
EXIT_UNKNOWN = 2
EXIT_INVALID = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def default_tol() -> float:
    raw = os.environ.get("GATEFLOW_TOL")
    if raw is None:
        return nx.DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"GATEFLOW_TOL={raw!r} is not a number") from None
    if not (tol > 0 and math.isfinite(tol)):
        raise UsageError("GATEFLOW_TOL must be positive")
    return tol


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gateflow", description="Time evolution of quantum logic gates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("json", "csv"), default_format="json"):
        p.add_argument("--tau", type=float, default=1.0, help="characteristic time (default 1.0)")
        p.add_argument("--output", default=None, help="output path (default: standard output)")
        p.add_argument("--format", choices=formats, default=default_format)

    p = sub.add_parser("evolve", help="evolution operator U(t) of a catalog gate")
    p.add_argument("--gate", required=True)
    p.add_argument("--t", type=float, default=None, help="time (default: tau)")
    common(p)

    p = sub.add_parser("trajectory", help="Bloch-sphere trajectory of a single-qubit gate")
    p.add_argument("--gate", required=True)
    p.add_argument("--theta", type=float, default=math.pi / 2)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--t-max", type=float, default=None, help="final time (default: 2 tau)")
    common(p, default_format="csv")

    p = sub.add_parser("bell", help="Bell-state preparation path")
    p.add_argument("--index", type=int, default=0, help="input basis state 0..3")
    p.add_argument("--samples", type=int, default=101)
    common(p, default_format="csv")

    p = sub.add_parser("embed", help="real embedding and SO(N) verdict")
    p.add_argument("--gate", required=True)
    p.add_argument("--t", type=float, default=None, help="time (default: tau)")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="A_FIRST")
    p.add_argument("--raw", action="store_true", help="test the real gate matrix itself, no embedding")
    common(p, formats=("json",))

    p = sub.add_parser("endo", help="operator basis report for End(R^{2^n})")
    p.add_argument("--n", type=int, required=True)
    common(p, formats=("json",))
    return parser


def _matrix_csv(m) -> str:
    m = np.asarray(m)
    rows = ((i, j, m[i, j].real, m[i, j].imag) for i in range(m.shape[0]) for j in range(m.shape[1]))
    return csv_text(["row", "col", "re", "im"], rows)


def _table_json(header, rows) -> str:
    return dumps({"columns": header, "rows": [list(r) for r in rows]}, indent=2) + "\n"


def cmd_evolve(args) -> str:
    spec = catalog(args.gate, args.tau)
    t = args.tau if args.t is None else args.t
    u = gate_at_time(spec, t)
    if args.format == "csv":
        return _matrix_csv(u)
    d = {"gate": spec.name, "t": t, "tau": spec.tau}
    d.update(matrix_to_dict(u))
    return dumps(d, indent=2) + "\n"


def cmd_trajectory(args) -> tuple[str, str]:
    spec = catalog(args.gate, args.tau)
    if spec.dim != 2:
        raise UsageError(f"{spec.name} is a {spec.dim}x{spec.dim} gate; trajectories need a single-qubit gate")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    t_max = 2 * args.tau if args.t_max is None else args.t_max
    if not t_max > 0:
        raise UsageError("--t-max must be positive")
    traj = sample_trajectory(spec, qubit_from_angles(args.theta, args.phi), args.samples, t_max)
    lat = latitude_residual(traj, gate_axis(spec))
    summary = (
        f"gate={spec.name} samples={len(traj)} latitude_residual={lat:.3e} "
        f"max_imag_residue={float(np.max(traj.imag_residue)):.6f}"
    )
    if args.format == "json":
        return _table_json(TRAJECTORY_HEADER, traj.rows()), summary
    return traj.to_csv(), summary


def cmd_bell(args) -> str:
    if args.index not in range(4):
        raise UsageError("--index must be in 0..3")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.format == "json":
        times, states, conc = bell_path(args.index, args.samples, args.tau)
        rows = (
            (t, c, *(x for z in psi for x in (z.real, z.imag)))
            for t, psi, c in zip(times, states, conc)
        )
        return _table_json(BELL_HEADER, rows)
    return bell_csv(args.index, args.samples, args.tau)


def cmd_embed(args, tol: float) -> str:
    spec = catalog(args.gate, args.tau)
    t = args.tau if args.t is None else args.t
    u = gate_at_time(spec, t)
    conv = Convention(args.convention)
    if args.raw:
        if nx.max_abs(u.imag) > tol:
            raise UsageError(f"{spec.name}(t={t}) has complex entries; --raw needs a real matrix")
        m = u.real
    else:
        m = embed(u, conv).matrix
    det = nx.determinant(m).real
    commutes = is_complex_structure(m, conv, tol) if m.shape[0] % 2 == 0 else False
    report = {
        "gate": spec.name,
        "t": t,
        "tau": spec.tau,
        "raw": args.raw,
        "convention": conv.value,
        "matrix": matrix_to_dict(m),
        "special_orthogonal": is_special_orthogonal(m, tol),
        "det": det,
        "commutes_with_j": commutes,
    }
    return dumps(report, indent=2) + "\n"


def cmd_endo(args) -> str:
    if not 1 <= args.n <= 3:
        raise UsageError("--n must be in 1..3")
    return dumps(basis_report(args.n), indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = default_tol()
        if not args.tau > 0:
            raise UsageError("--tau must be positive")
        if args.command == "trajectory":
            text, summary = cmd_trajectory(args)
            _emit(text, args.output)
            # keep CSV on stdout clean when no output file is given
            print(summary, file=sys.stdout if args.output else sys.stderr)
        elif args.command == "evolve":
            _emit(cmd_evolve(args), args.output)
        elif args.command == "bell":
            _emit(cmd_bell(args), args.output)
        elif args.command == "embed":
            _emit(cmd_embed(args, tol), args.output)
        elif args.command == "endo":
            _emit(cmd_endo(args), args.output)
    except UnknownGateError as exc:
        print(f"gateflow: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (UsageError, ValueError, OSError) as exc:
        print(f"gateflow: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
