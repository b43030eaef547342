"""Command-line interface: evaluate, verify, scan, optimize.

Exit codes: 0 success, 1 verification failure, 2 invalid or infeasible input,
3 undefined quantity (vacuum-dominated state), 4 I/O error. Angles accept the
exact shorthands "pi", "2pi", "pi/2", "3pi/4", ... as well as plain radians.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from . import __version__, analytic, benchmarks, fock, optimize, scanio
from .config import CliConfig, load_config
from .errors import (
    InfeasibleAmplitudeError,
    JanusError,
    ScanFormatError,
    UndefinedG2Error,
)
from .params import Axis, GridSpec, JanusParams, SqueezeParam

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INVALID = 2
EXIT_UNDEFINED = 3
EXIT_IO = 4

_ANGLE_RE = re.compile(r"^([+-]?)(\d+(?:\.\d*)?)?pi(?:/(\d+(?:\.\d*)?))?$")


def parse_angle(text: str) -> float:
    """Parse radians with exact multiples of pi: 'pi', '2pi', 'pi/2', '-3pi/4'."""
    token = text.strip().lower().replace(" ", "")
    m = _ANGLE_RE.match(token)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        coef = float(m.group(2)) if m.group(2) else 1.0
        div = float(m.group(3)) if m.group(3) else 1.0
        return sign * coef * math.pi / div
    try:
        return float(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None


def _nonneg_float(text: str) -> float:
    value = float(text)
    if value < 0.0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="janusg2",
        description="Second-order coherence of superposed single-mode squeezed vacua.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", metavar="FILE", help="key = value configuration file")
    parser.add_argument("--outdir", help="output directory (overrides config/environment)")
    parser.add_argument("--norm-tol", type=float, help="normalization tolerance")
    parser.add_argument("--oracle-tol", type=float, help="analytic/oracle agreement tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    g2p = sub.add_parser("g2", help="evaluate g2 for one parameter set (analytic and oracle)")
    g2p.add_argument("--r", type=_nonneg_float, required=True, help="squeezing magnitude r")
    g2p.add_argument("--s", type=_nonneg_float, help="second magnitude s (default: r)")
    g2p.add_argument("--theta", type=parse_angle, default=None, help="phase of the first state")
    g2p.add_argument("--phi", type=parse_angle, default=None, help="phase of the second state")
    g2p.add_argument("--Delta", type=parse_angle, default=None,
                     help="relative orientation theta - phi (sets theta=Delta, phi=0)")
    g2p.add_argument("--delta", type=parse_angle, default=0.0, help="superposition phase")
    g2p.add_argument("--eta", type=_nonneg_float, required=True, help="amplitude |eta|")
    g2p.add_argument("--chi", type=_nonneg_float, default=None,
                     help="amplitude |chi| (default: recovered from normalization)")

    vp = sub.add_parser("verify", help="run a seeded analytic-vs-oracle property suite")
    vp.add_argument("--suite", choices=("overlap", "cross", "g2", "series", "oddcat", "all"),
                    default="all")
    vp.add_argument("--samples", type=int, default=200)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--dump-state", metavar="FILE", default=None,
                    help="dump the worst-offending Fock vector as 'n real imag' lines")

    sp = sub.add_parser("scan", help="evaluate a gridded g2 surface and write it to disk")
    sp.add_argument("--fig", choices=benchmarks.PRESET_IDS, help="named reproduction preset")
    sp.add_argument("--points", type=int, default=256, help="grid resolution for presets")
    sp.add_argument("--axis", action="append", default=[], metavar="NAME:LO:HI:POINTS",
                    help="custom axis (repeatable, max 2)")
    sp.add_argument("--fix", action="append", default=[], metavar="NAME=VALUE",
                    help="fixed parameter (repeatable; angles accept pi shorthands)")
    sp.add_argument("--formula", choices=optimize.FORMULAS, default="general")
    sp.add_argument("--out", required=True, help="output file")
    sp.add_argument("--format", choices=scanio.FORMATS, default=None)

    op = sub.add_parser("optimize", help="locate g2 minima")
    op.add_argument("--mode", choices=("sweet-spot", "boundary", "table-s1"), required=True)
    op.add_argument("--out", default=None, help="optional output file for the records")
    op.add_argument("--format", choices=scanio.FORMATS, default=None)
    op.add_argument("--points", type=int, default=96, help="grid resolution for sweet-spot mode")
    return parser


# ---------------------------------------------------------------------------
# g2 command


def cmd_g2(args, cfg: CliConfig) -> int:
    if args.Delta is not None and (args.theta is not None or args.phi is not None):
        print("error: give either --Delta or --theta/--phi, not both", file=sys.stderr)
        return EXIT_INVALID
    theta = args.Delta if args.Delta is not None else (args.theta or 0.0)
    phi = 0.0 if args.Delta is not None else (args.phi or 0.0)
    s = args.r if args.s is None else args.s
    xi = SqueezeParam(args.r, theta)
    zeta = SqueezeParam(s, phi)
    try:
        chi = args.chi
        if chi is None:
            chi = analytic.solve_chi(args.eta, xi, zeta, args.delta)
        params = JanusParams(xi=xi, zeta=zeta, chi_mag=chi, eta_mag=args.eta, delta=args.delta)
        resid = analytic.norm_residual(params)
        g2_analytic = analytic.g2_general(params, cfg.norm_tol)
        cutoff = fock.adaptive_cutoff(max(args.r, s), cfg.tail_target)
        vec = fock.superpose(
            params.chi, fock.squeezed_fock(xi, cutoff),
            params.eta, fock.squeezed_fock(zeta, cutoff),
        )
        m = fock.moments(vec)
        g2_oracle = fock.g2_fock(vec)
    except InfeasibleAmplitudeError as exc:
        print(f"error: infeasible amplitudes: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UndefinedG2Error as exc:
        print(f"error: g2 undefined for vacuum: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except JanusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"r={args.r:.10g} s={s:.10g} Delta={params.Delta:.10g} delta={params.delta:.10g}")
    print(f"chi           = {chi:.12g}")
    print(f"eta           = {args.eta:.12g}")
    print(f"norm residual = {resid:.3e}")
    print(f"mean photons  = {m['n_mean']:.12g}")
    print(f"g2 analytic   = {g2_analytic:.12g}")
    print(f"g2 oracle     = {g2_oracle:.12g}")
    print(f"difference    = {g2_analytic - g2_oracle:.3e}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify command


def _sample_params(rng):
    r = rng.uniform(0.05, 1.2)
    s = rng.uniform(0.05, 1.2)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    delta = rng.uniform(0.0, 2.0 * math.pi)
    eta = rng.uniform(0.0, 3.0)
    return r, s, theta, phi, delta, eta


def _suite_overlap(samples, seed, cfg):
    rng = np.random.default_rng(seed)
    worst = (0.0, None)
    for _ in range(samples):
        r, s, theta, phi, _, _ = _sample_params(rng)
        xi, zeta = SqueezeParam(r, theta), SqueezeParam(s, phi)
        cutoff = fock.adaptive_cutoff(max(r, s), cfg.tail_target)
        num = fock.cross_moment_fock(fock.squeezed_fock(xi, cutoff),
                                     fock.squeezed_fock(zeta, cutoff), "overlap")
        ana = analytic.overlap(xi, zeta)
        dev = max(abs(num - ana), abs(ana - analytic.overlap(zeta, xi).conjugate()))
        if dev > worst[0]:
            worst = (dev, (r, s, theta, phi))
    return worst, 1e-12, None


def _suite_cross(samples, seed, cfg):
    rng = np.random.default_rng(seed)
    worst = (0.0, None)
    for _ in range(samples):
        r, s, theta, phi, _, _ = _sample_params(rng)
        xi, zeta = SqueezeParam(r, theta), SqueezeParam(s, phi)
        cutoff = fock.adaptive_cutoff(max(r, s), cfg.tail_target)
        v1, v2 = fock.squeezed_fock(xi, cutoff), fock.squeezed_fock(zeta, cutoff)
        a1, a2 = analytic.cross_n(xi, zeta), analytic.cross_n2(xi, zeta)
        # relative where the moments are large, absolute near zero
        d1 = abs(fock.cross_moment_fock(v1, v2, "n") - a1) / max(1.0, abs(a1))
        d2 = abs(fock.cross_moment_fock(v1, v2, "n2") - a2) / max(1.0, abs(a2))
        dev = max(d1, d2)
        if dev > worst[0]:
            worst = (dev, (r, s, theta, phi))
    return worst, 1e-10, None


def _suite_g2(samples, seed, cfg):
    rng = np.random.default_rng(seed)
    worst = (0.0, None)
    worst_vec = None
    done = 0
    while done < samples:
        r, s, theta, phi, delta, eta = _sample_params(rng)
        xi, zeta = SqueezeParam(r, theta), SqueezeParam(s, phi)
        try:
            chi = analytic.solve_chi(eta, xi, zeta, delta)
            params = JanusParams(xi=xi, zeta=zeta, chi_mag=chi, eta_mag=eta, delta=delta)
            ana = analytic.g2_general(params, cfg.norm_tol)
            cutoff = fock.adaptive_cutoff(max(r, s), cfg.tail_target)
            vec = fock.superpose(params.chi, fock.squeezed_fock(xi, cutoff),
                                 params.eta, fock.squeezed_fock(zeta, cutoff))
            num = fock.g2_fock(vec)
        except (InfeasibleAmplitudeError, UndefinedG2Error):
            continue
        done += 1
        dev = abs(ana - num)
        if dev > worst[0]:
            worst = (dev, (r, s, theta, phi, delta, eta))
            worst_vec = vec
    return worst, cfg.oracle_tol, worst_vec


def _suite_series(samples, seed, cfg):
    rng = np.random.default_rng(seed)
    worst = (0.0, None)
    terms = 500
    n = np.arange(terms, dtype=float)
    # C_n = (2n-1)!!/(2n)!! built by its ratio recurrence
    C = np.ones(terms)
    for k in range(1, terms):
        C[k] = C[k - 1] * (2 * k - 1) / (2 * k)
    for _ in range(samples):
        rad = 0.9 * math.sqrt(rng.uniform(0.0, 1.0))
        ang = rng.uniform(0.0, 2.0 * math.pi)
        z = rad * np.exp(1j * ang)
        zp = z**n
        s1 = z * (1 - z) ** 0.5 * np.sum((2 * n + 1) * C * zp)
        s2 = z * (1 - z) ** 0.5 * np.sum((2 * n + 1) ** 2 * C * zp)
        dev = max(abs(s1 - z / (1 - z)), abs(s2 - z * (2 * z + 1) / (1 - z) ** 2))
        if dev > worst[0]:
            worst = (dev, (z,))
    return worst, 1e-10, None


def _suite_oddcat(samples, seed, cfg):
    rng = np.random.default_rng(seed)
    worst = (0.0, None)
    worst_vec = None
    for _ in range(samples):
        r = rng.uniform(0.05, 1.2)
        cutoff = fock.adaptive_cutoff(r, cfg.tail_target)
        vec = fock.odd_cat(r, cutoff)
        dev = abs(fock.g2_fock(vec) - analytic.g2_boundary(r))
        if dev > worst[0]:
            worst = (dev, (r,))
            worst_vec = vec
    return worst, 1e-8, worst_vec


_SUITES = {
    "overlap": _suite_overlap,
    "cross": _suite_cross,
    "g2": _suite_g2,
    "series": _suite_series,
    "oddcat": _suite_oddcat,
}


def cmd_verify(args, cfg: CliConfig) -> int:
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    dump_vec = None
    for name in names:
        (dev, tuple_), tol, vec = _SUITES[name](args.samples, args.seed, cfg)
        ok = dev <= tol
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        print(f"suite={name} samples={args.samples} max_dev={dev:.6e} tol={tol:.1e} status={status}")
        if not ok:
            print(f"  worst offender: {tuple_}")
            if vec is not None and dump_vec is None:
                dump_vec = vec
    if dump_vec is not None and args.dump_state:
        try:
            dump_vec.dump(args.dump_state)
            print(f"worst-offender state dumped to {args.dump_state}")
        except OSError as exc:
            print(f"error: cannot write {args.dump_state}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------
# scan command


def _parse_axis(text: str) -> Axis:
    parts = text.split(":")
    if len(parts) != 4:
        raise ValueError(f"axis must be NAME:LO:HI:POINTS, got {text!r}")
    name, lo, hi, points = parts
    return Axis(name, parse_angle(lo), parse_angle(hi), int(points))


def cmd_scan(args, cfg: CliConfig) -> int:
    fmt = args.format or cfg.format
    try:
        if args.fig:
            spec, formula = benchmarks.figure_presets(args.points)[args.fig]
            if formula == "boundary":
                axis = spec.axes[0]
                result = scanio.boundary_scan(axis.lo, axis.hi, axis.points)
            else:
                result = scanio.run_scan(spec, formula, cfg.norm_tol)
        else:
            if not args.axis:
                print("error: give --fig or at least one --axis", file=sys.stderr)
                return EXIT_INVALID
            axes = tuple(_parse_axis(a) for a in args.axis)
            fixed = {}
            for item in args.fix:
                key, sep, value = item.partition("=")
                if not sep:
                    raise ValueError(f"--fix expects NAME=VALUE, got {item!r}")
                fixed[key.strip()] = parse_angle(value)
            spec = GridSpec(axes=axes, fixed=fixed)
            result = scanio.run_scan(spec, args.formula, cfg.norm_tol)
    except (ValueError, JanusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        scanio.write_scan(result, args.out, fmt)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    feasible = int(np.isfinite(result.values).sum())
    total = result.values.size
    print(f"scan written to {args.out} [{fmt}] shape={result.values.shape} "
          f"feasible={feasible}/{total} min={result.min_value():.6g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# optimize command


def _print_record(rec, label):
    print(f"{label}: r={rec.r:.6f} s={rec.s:.6f} Delta={rec.Delta:.6f} delta={rec.delta:.6f} "
          f"eta={rec.eta_mag:.6f} chi={rec.chi_mag:.6f} g2={rec.g2:.6f} "
          f"[{rec.kind}, {rec.evaluations} evals, converged={rec.converged}]")


def cmd_optimize(args, cfg: CliConfig) -> int:
    if args.mode == "boundary":
        points = max(args.points, 64)
        result = scanio.boundary_scan(2.0 / points, 6.0, points)
        lo = result.values[0]
        hi = result.values[-1]
        print(f"boundary curve on r in (0, 6], {points} points: "
              f"g2({result.spec.axes[0].lo:.4g})={lo:.6f} ... g2(6)={hi:.6f}")
        if args.out:
            scanio.write_scan(result, args.out, args.format or cfg.format)
            print(f"curve written to {args.out}")
        return EXIT_OK

    if args.mode == "table-s1":
        rows = optimize.table_s1(
            [r for r, _ in benchmarks.REFERENCE_TABLE],
            benchmarks.REFERENCE_ETA,
            [g for _, g in benchmarks.REFERENCE_TABLE],
            cfg.norm_tol,
        )
        print(f"{'r':>5} {'eta':>9} {'g2':>12} {'published':>10} {'deviation':>12}")
        ok = True
        for row in rows:
            if not row.feasible:
                print(f"{row.r:5.2f} {row.eta_mag:9.5f} {'infeasible':>12} {row.reference:10.5f} {'-':>12}")
                ok = False
                continue
            dev = row.deviation
            print(f"{row.r:5.2f} {row.eta_mag:9.5f} {row.g2:12.5f} {row.reference:10.5f} {dev:+12.2e}")
            ok &= abs(dev) <= 5e-5
        if not ok:
            print("reproduction FAILED: deviations exceed 5e-5 or rows are infeasible "
                  "(see README: published-benchmark status)")
        return EXIT_OK if ok else EXIT_VERIFY_FAIL

    # sweet-spot: grid over (r, eta) at Delta = delta = pi, then local refinement
    spec = GridSpec(
        axes=(Axis("r", 1.0 / args.points, 1.0, args.points),
              Axis("eta", 0.0, 3.0, args.points)),
        fixed={"Delta": math.pi, "delta": math.pi},
    )
    try:
        seed = optimize.grid_min(spec, "optimal", cfg.norm_tol)
    except JanusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _print_record(seed, "grid minimum   ")
    refined = optimize.refine_local(seed, ("r", "eta"), tol=1e-6, formula="optimal",
                                    norm_tol=cfg.norm_tol)
    _print_record(refined, "refined minimum")
    slice_rows = optimize.table_s1(
        [r for r, _ in benchmarks.REFERENCE_TABLE], benchmarks.REFERENCE_ETA,
        norm_tol=cfg.norm_tol,
    )
    feas = [row for row in slice_rows if row.feasible]
    if feas:
        best = min(feas, key=lambda row: row.g2)
        print(f"fixed-eta slice minimum (eta={benchmarks.REFERENCE_ETA}): "
              f"r={best.r:.2f} g2={best.g2:.6f}")
    lo, hi = benchmarks.SWEET_SPOT_BOX["g2"]
    if not (lo <= refined.g2 <= hi):
        print(f"note: refined g2 {refined.g2:.6f} lies outside the published window "
              f"[{lo}, {hi}] (see README: published-benchmark status)")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config, outdir=args.outdir,
                          norm_tol=args.norm_tol, oracle_tol=args.oracle_tol)
    except (OSError, ValueError) as exc:
        print(f"error: bad configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID
    handlers = {"g2": cmd_g2, "verify": cmd_verify, "scan": cmd_scan, "optimize": cmd_optimize}
    try:
        return handlers[args.command](args, cfg)
    except ScanFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
