"""
Command-line front end.

    coinwalk spectrum   --n 20 --alpha-n 0 --sweep-r 0,0.25,0.5,0.75,1
    coinwalk bloch      --n 20 --alpha-n 0 --sweep-r 0.1,0.5,0.9 --format csv
    coinwalk degeneracy --n 4 --hadamard
    coinwalk protected  --n 20 --alpha-n 0 --r 0.5 --steps 1000 --seed 7
    coinwalk verify     --n 32 --trials 50

Exit codes: 0 success, 1 internal error or failed verification, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import __version__
from .bloch import BlochRecord, trajectory
from .coin import CoinParams, hadamard_params
from .eigensystem import GaugeChoice, equal_weight_gauge
from .errors import CoinwalkError, DomainError
from .oracle import compare_spectra, dense_eigendecompose
from .protected import RNG_ALGORITHM, protected_trace
from .spectrum import SpectralPoint, degeneracy_report, full_spectrum

SCHEMA_VERSION = "1"

SPECTRUM_COLUMNS = ("R", "alpha", "beta", "k", "z", "lambda", "partner_k")
DEGENERACY_COLUMNS = ("k", "partner_k", "unique")
PROTECTED_COLUMNS = ("t", "R", "alpha", "overlap1", "overlap2")
VERIFY_COLUMNS = ("trial", "N", "R", "alpha", "beta", "max_mismatch", "passed")


class UsageError(Exception):
    pass


def _float_list(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="number of lattice sites N")
    p.add_argument("--r", type=float, help="bias parameter R in [0, 1]")
    p.add_argument("--alpha", type=float, help="coin angle alpha in radians")
    p.add_argument("--alpha-n", type=int, help="integer n with alpha = n*pi/N (exact lattice value)")
    p.add_argument("--beta", type=float, help="coin angle beta in radians (default 0)")
    p.add_argument("--hadamard", action="store_true", help="use R=1/2, alpha=3pi/2, beta=pi/2")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--sweep-r", type=_float_list, help="comma-separated list of R values")
    p.add_argument("--sweep-beta", type=_float_list, help="comma-separated list of beta values")
    p.add_argument("--gauge-s", type=float, help="gauge weight s1 for every degenerate pair")
    p.add_argument("--gauge-omega", type=float, help="gauge phase omega1 for every degenerate pair")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coinwalk", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalue phases lambda(k, z)")
    _common(p)
    p = sub.add_parser("bloch", help="Bloch vectors of the reduced coin eigenstates")
    _common(p)
    p = sub.add_parser("degeneracy", help="conjugate pairs and unique wavenumbers")
    _common(p)
    p = sub.add_parser("protected", help="overlap trace under random per-step R")
    _common(p)
    p.add_argument("--k", type=int, help="unique wavenumber (default: first one)")
    p.add_argument("--x", type=_float_list, help="weights x0,x1,x2 (default: equal)")
    p.add_argument("--vary-alpha", action="store_true",
                   help="also redraw alpha every step (breaks the protection)")
    p = sub.add_parser("verify", help="closed-form spectrum against dense diagonalization")
    _common(p)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--inject-error", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


def _base_params(args, need_alpha: bool = True, need_r: bool = True) -> List[CoinParams]:
    """Expand the flags into the ordered list of parameter points (R outer, beta inner)."""
    if args.n is None:
        raise UsageError("--n is required")
    if args.hadamard:
        if args.alpha is not None or args.alpha_n is not None:
            raise UsageError("--hadamard cannot be combined with --alpha/--alpha-n")
        base = hadamard_params(args.n)
    else:
        if args.alpha is not None and args.alpha_n is not None:
            raise UsageError("give only one of --alpha and --alpha-n")
        if args.alpha is None and args.alpha_n is None and need_alpha:
            raise UsageError("one of --alpha or --alpha-n is required")
        R = args.r
        if R is None:
            if need_r and not args.sweep_r:
                raise UsageError("--r or --sweep-r is required")
            R = 0.5
        beta = args.beta or 0.0
        if args.alpha_n is not None:
            base = CoinParams.from_alpha_n(args.alpha_n, args.n, R, beta)
        else:
            base = CoinParams(R=R, alpha=args.alpha or 0.0, beta=beta, N=args.n)
    if args.r is not None and args.hadamard:
        base = base.with_R(args.r)
    if args.hadamard and args.beta is not None:
        base = base.with_beta(args.beta)
    rs = args.sweep_r if args.sweep_r else [base.R]
    betas = args.sweep_beta if args.sweep_beta else [base.beta]
    return [base.with_R(R).with_beta(b) for R in rs for b in betas]


def _gauge(args):
    if args.gauge_s is None and args.gauge_omega is None:
        return None
    if args.gauge_s is not None:
        return GaugeChoice(args.gauge_s, args.gauge_omega or 0.0)
    omega = args.gauge_omega

    def policy(params, k, kp, z):
        return GaugeChoice(equal_weight_gauge(params, k, kp, z).s1, omega)

    return policy


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def render(fmt: str, meta: dict, columns: Sequence[str], rows: List[dict]) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "data": rows}, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in columns])
    return buf.getvalue()


def _meta(command: str, args, points: Sequence[CoinParams], **extra) -> dict:
    meta = {
        "version": SCHEMA_VERSION,
        "package_version": __version__,
        "command": command,
        "params": [p.as_dict() for p in points],
        "seed": args.seed,
    }
    meta.update(extra)
    return meta


def cmd_spectrum(args) -> tuple:
    points = _base_params(args)
    rows = []
    for p in points:
        for sp in full_spectrum(p):
            rows.append({"R": p.R, "alpha": p.alpha, "beta": p.beta, "k": sp.k,
                         "z": sp.z, "lambda": sp.lam, "partner_k": sp.partner_k})
    return _meta("spectrum", args, points), SPECTRUM_COLUMNS, rows, 0


def cmd_bloch(args) -> tuple:
    points = _base_params(args)
    records = trajectory(points, gauge=_gauge(args))
    return _meta("bloch", args, points), BlochRecord.CSV_COLUMNS, [r.as_dict() for r in records], 0


def cmd_degeneracy(args) -> tuple:
    points = _base_params(args, need_r=False)
    p = points[0]
    report = degeneracy_report(p)
    rows = []
    for k in range(p.N):
        rows.append({"k": k, "partner_k": report.partner(k) if report.is_degenerate else None,
                     "unique": k in report.unique_ks})
    meta = _meta("degeneracy", args, [p], report=report.as_dict())
    if args.format == "json":
        return meta, DEGENERACY_COLUMNS, [report.as_dict()], 0
    return meta, DEGENERACY_COLUMNS, rows, 0


def cmd_protected(args) -> tuple:
    points = _base_params(args)
    p = points[0]
    report = degeneracy_report(p)
    if not report.unique_ks:
        raise UsageError(
            "no unique eigenvalues: alpha must equal n*pi/N with n, N giving an unpaired "
            f"wavenumber (report: {report.as_dict()})"
        )
    if args.k is not None and args.k not in report.unique_ks:
        raise UsageError(f"--k {args.k} is not a unique wavenumber; choose from {report.unique_ks}")
    x = tuple(args.x) if args.x else (3 ** -0.5,) * 3
    if len(x) != 3:
        raise UsageError("--x needs exactly three weights")
    rng = np.random.default_rng(args.seed)
    trace = protected_trace(p, args.steps, rng, k=args.k, x=x, vary_alpha=args.vary_alpha)
    rows = [dict(zip(PROTECTED_COLUMNS, r)) for r in trace.rows()]
    meta = _meta("protected", args, [p], rng=RNG_ALGORITHM, k=trace.k, x=list(x),
                 vary_alpha=bool(args.vary_alpha))
    return meta, PROTECTED_COLUMNS, rows, 0


def cmd_verify(args) -> tuple:
    rng = np.random.default_rng(args.seed)
    explicit = args.hadamard or args.alpha is not None or args.alpha_n is not None
    if explicit:
        points = _base_params(args)
    else:
        points = []
        for _ in range(args.trials):
            N = args.n if args.n is not None else int(rng.integers(2, 33))
            points.append(CoinParams(R=rng.uniform(), alpha=rng.uniform(0, 2 * np.pi),
                                     beta=rng.uniform(0, 2 * np.pi), N=N))
    rows = []
    failed = 0
    for i, p in enumerate(points):
        closed = full_spectrum(p)
        if args.inject_error and i == 0:
            s = closed[0]
            closed[0] = SpectralPoint(s.k, s.z, s.lam + args.inject_error, s.partner_k)
        cmp = compare_spectra(closed, dense_eigendecompose(p))
        failed += not cmp.passed
        rows.append({"trial": i, "N": p.N, "R": p.R, "alpha": p.alpha, "beta": p.beta,
                     "max_mismatch": cmp.max_mismatch, "passed": cmp.passed,
                     "offending": [list(o) for o in cmp.offending]})
        for k, z, d in cmp.offending:
            print(f"mismatch: trial {i} N={p.N} k={k} z={z} distance={d:.3e}", file=sys.stderr)
    print(f"verify: {len(points) - failed}/{len(points)} passed", file=sys.stderr)
    meta = _meta("verify", args, points, rng=RNG_ALGORITHM)
    return meta, VERIFY_COLUMNS, rows, 1 if failed else 0


COMMANDS = {
    "spectrum": cmd_spectrum,
    "bloch": cmd_bloch,
    "degeneracy": cmd_degeneracy,
    "protected": cmd_protected,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        meta, columns, rows, code = COMMANDS[args.command](args)
    except (UsageError, DomainError, CoinwalkError, IndexError) as exc:
        print(f"coinwalk {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"coinwalk {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 1
    text = render(args.format, meta, columns, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
