"""Constrained minimization of g2 over the superposition parameter space.

The objective at a point (r, s, Delta, delta, |eta|) recovers |chi| from the
normalization constraint and evaluates g2; infeasible points (no normalized
state, or vanishing mean photon number) are skipped rather than clamped.
Grid search plus a deterministic derivative-free simplex refinement cover the
low-dimensional landscapes; the closed-form boundary curve doubles as an
independent code path against the rational polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import analytic
from .errors import (
    EmptyFeasibleSetError,
    FormulaMismatchError,
    InfeasibleAmplitudeError,
    UndefinedG2Error,
    UnnormalizedInputError,
)
from .params import GridSpec, JanusParams, OptimumRecord, SqueezeParam

FORMULAS = ("general", "equal", "optimal")

# Reason codes for skipped grid points.
REASON_OK = 0
REASON_INFEASIBLE = 1
REASON_UNDEFINED = 2

MAX_REFINE_EVALS = 100_000

__all__ = [
    "FORMULAS",
    "TableRow",
    "evaluate_point",
    "point_from_spec",
    "validate_formula",
    "boundary_curve",
    "grid_min",
    "refine_local",
    "table_s1",
]


def validate_formula(spec: GridSpec, formula: str) -> None:
    """Reject formula/grid combinations that cannot be evaluated."""
    if formula not in FORMULAS:
        raise FormulaMismatchError(f"unknown formula {formula!r}; expected one of {FORMULAS}")
    names = {a.name for a in spec.axes} | set(spec.fixed)
    if formula == "general":
        if "s" not in names:
            raise FormulaMismatchError("general formula needs s as an axis or fixed value")
        return
    # equal and optimal tie s to r
    if "s" in names:
        raise FormulaMismatchError(f"{formula} formula ties s to r; do not specify s")
    if formula == "optimal":
        for angle in ("Delta", "delta"):
            val = spec.fixed.get(angle)
            if val is None or abs(val - math.pi) > 1e-12:
                raise FormulaMismatchError(
                    f"optimal formula requires fixed {angle} = pi, got {val!r}"
                )


def point_from_spec(spec: GridSpec, axis_values: tuple) -> dict:
    """Assemble the full parameter dict for one grid point."""
    point = dict(spec.fixed)
    for axis, value in zip(spec.axes, axis_values):
        point[axis.name] = value
    return point


def evaluate_point(point: dict, formula: str, norm_tol: float = analytic.NORM_TOL):
    """Evaluate one parameter point.

    Returns (g2, chi, REASON_OK) on success and (nan, nan, reason) for
    infeasible or vacuum-dominated points. The reason codes match the scan
    serialization.
    """
    r = point["r"]
    s = point["r"] if formula in ("equal", "optimal") else point["s"]
    Delta = point.get("Delta", 0.0)
    delta = point.get("delta", 0.0)
    eta = point["eta"]
    if r < 0.0 or s < 0.0 or eta < 0.0:
        return math.nan, math.nan, REASON_INFEASIBLE
    xi = SqueezeParam(r, Delta)
    zeta = SqueezeParam(s, 0.0)
    try:
        chi = analytic.solve_chi(eta, xi, zeta, delta)
        if formula == "equal":
            g2 = analytic.g2_equal_squeeze(r, Delta, delta, chi, eta, norm_tol)
        elif formula == "optimal":
            g2 = analytic.g2_optimal(r, chi, eta, norm_tol)
        else:
            params = JanusParams(xi=xi, zeta=zeta, chi_mag=chi, eta_mag=eta, delta=delta)
            g2 = analytic.g2_general(params, norm_tol)
    except InfeasibleAmplitudeError:
        return math.nan, math.nan, REASON_INFEASIBLE
    except (UndefinedG2Error, ValueError):
        return math.nan, math.nan, REASON_UNDEFINED
    except UnnormalizedInputError:  # pragma: no cover - solve_chi guarantees the constraint
        return math.nan, math.nan, REASON_INFEASIBLE
    return g2, chi, REASON_OK


def _record_from_point(point, formula, chi, g2, kind, evaluations, skipped, converged=True):
    s = point["r"] if formula in ("equal", "optimal") else point["s"]
    return OptimumRecord(
        r=point["r"],
        s=s,
        Delta=point.get("Delta", 0.0),
        delta=point.get("delta", 0.0),
        eta_mag=point["eta"],
        chi_mag=chi,
        g2=g2,
        kind=kind,
        evaluations=evaluations,
        skipped=skipped,
        converged=converged,
    )


def _boundary_substitution(r: float) -> float:
    """Boundary value by substituting L = 1/sinh^2 r into the optimal-phase bracket form

        (3 + 1/sinh^2 r) [1 + L + L K^4 (1 - 2 tanh^2 r)] / [1 + L + L K^2]^2.

    This substitution reproduces the rational boundary polynomial of
    :func:`janusg2.analytic.g2_boundary` exactly: L = 1/sinh^2 r is the value
    of 2 K |chi| |eta| at the largest |eta| admitting a normalized state
    (vanishing discriminant of the amplitude quadratic), where the realizing
    pair (|chi|, |eta|) = (K M, M), M = (1 - K^2)^{-1/2}, satisfies the
    constraint |chi|^2 + |eta|^2 - 2 K |chi| |eta| = 1 identically.
    """
    u = math.sinh(r) ** 2
    if u == 0.0:
        return 0.5
    K2 = 1.0 / (1.0 + 2.0 * u)
    K = math.sqrt(K2)
    M = 1.0 / math.sqrt(1.0 - K2)
    chi = K * M
    # constraint residual in cancellation-free form: (chi - K M)^2 + M^2 (1 - K^2) - 1
    assert abs((chi - K * M) ** 2 + M * M * (1.0 - K2) - 1.0) < 1e-12
    L = 1.0 / u
    t2 = u / (1.0 + u)
    num = 1.0 + L + L * K2 * K2 * (1.0 - 2.0 * t2)
    den = (1.0 + L + L * K2) ** 2
    return (3.0 + 1.0 / u) * num / den


def boundary_curve(r_values) -> list[tuple[float, float]]:
    """(r, g2) pairs of the lower-boundary curve via the substitution path.

    Independent of the rational-polynomial path in
    :func:`janusg2.analytic.g2_boundary`; the two agree to better than 1e-10.
    """
    out = []
    for r in r_values:
        if r <= 0.0:
            raise ValueError("boundary curve requires r > 0")
        out.append((r, _boundary_substitution(r)))
    return out


def grid_min(spec: GridSpec, formula: str = "general", norm_tol: float = analytic.NORM_TOL) -> OptimumRecord:
    """Exhaustive scan of a GridSpec; returns the first-encountered smallest point.

    Iterates row-major in axis declaration order; ties break to the lowest
    flattened index; infeasible points are skipped and counted.
    """
    validate_formula(spec, formula)
    grids = [axis.grid() for axis in spec.axes]
    best = None
    evaluations = 0
    skipped = 0

    def walk(prefix):
        nonlocal best, evaluations, skipped
        if len(prefix) == len(grids):
            point = point_from_spec(spec, prefix)
            evaluations += 1
            g2, chi, reason = evaluate_point(point, formula, norm_tol)
            if reason != REASON_OK:
                skipped += 1
                return
            if best is None or g2 < best[0]:
                best = (g2, chi, point)
            return
        for v in grids[len(prefix)]:
            walk(prefix + (v,))

    walk(())
    if best is None:
        raise EmptyFeasibleSetError("every grid point was infeasible")
    g2, chi, point = best
    return _record_from_point(point, formula, chi, g2, "grid", evaluations, skipped)


_AXIS_ORDER = ("r", "s", "Delta", "delta", "eta")


def refine_local(
    seed: OptimumRecord,
    free_axes,
    tol: float = 1e-6,
    formula: str = "general",
    norm_tol: float = analytic.NORM_TOL,
    max_evals: int = MAX_REFINE_EVALS,
) -> OptimumRecord:
    """Derivative-free simplex descent from a feasible seed over the free axes.

    Standard Nelder-Mead coefficients (reflection 1, expansion 2, contraction
    0.5, shrink 0.5), fixed iteration order, no restarts: identical seeds and
    tolerances yield identical results. Terminates when the simplex diameter
    drops below ``tol`` or the evaluation budget is exhausted (in which case
    the best point so far is returned with ``converged=False``). The result
    never exceeds the seed's g2.
    """
    free = [a for a in _AXIS_ORDER if a in set(free_axes)]
    if not free:
        raise ValueError("free_axes must name at least one parameter")
    if formula in ("equal", "optimal") and "s" in free:
        raise FormulaMismatchError(f"{formula} formula ties s to r; s cannot be free")
    base = {
        "r": seed.r,
        "s": seed.s,
        "Delta": seed.Delta,
        "delta": seed.delta,
        "eta": seed.eta_mag,
    }
    evaluations = 0
    skipped = 0

    def objective(vec):
        nonlocal evaluations, skipped
        point = dict(base)
        for name, v in zip(free, vec):
            point[name] = v
        evaluations += 1
        g2, chi, reason = evaluate_point(point, formula, norm_tol)
        if reason != REASON_OK:
            skipped += 1
            return math.inf, math.nan, point
        return g2, chi, point

    x0 = [base[name] for name in free]
    f0, chi0, p0 = objective(x0)
    if not math.isfinite(f0):
        raise EmptyFeasibleSetError("seed point is infeasible")

    # Initial simplex: one extra vertex per free axis, deterministic step.
    verts = [list(x0)]
    for i in range(len(free)):
        v = list(x0)
        step = 0.05 * max(abs(v[i]), 0.1)
        v[i] += step
        verts.append(v)
    evals = [objective(v) for v in verts]

    converged = True
    while True:
        order = sorted(range(len(verts)), key=lambda i: (evals[i][0], i))
        verts = [verts[i] for i in order]
        evals = [evals[i] for i in order]
        diameter = max(
            max(abs(a - b) for a, b in zip(verts[0], verts[j]))
            for j in range(1, len(verts))
        )
        if diameter < tol:
            break
        if evaluations >= max_evals:
            converged = False
            break
        centroid = [sum(v[i] for v in verts[:-1]) / (len(verts) - 1) for i in range(len(free))]
        worst = verts[-1]
        reflect = [c + (c - w) for c, w in zip(centroid, worst)]
        fr = objective(reflect)
        if fr[0] < evals[0][0]:
            expand = [c + 2.0 * (c - w) for c, w in zip(centroid, worst)]
            fe = objective(expand)
            if fe[0] < fr[0]:
                verts[-1], evals[-1] = expand, fe
            else:
                verts[-1], evals[-1] = reflect, fr
        elif fr[0] < evals[-2][0]:
            verts[-1], evals[-1] = reflect, fr
        else:
            if fr[0] < evals[-1][0]:
                contract = [c + 0.5 * (r_ - c) for c, r_ in zip(centroid, reflect)]
            else:
                contract = [c + 0.5 * (w - c) for c, w in zip(centroid, worst)]
            fc = objective(contract)
            if fc[0] < min(fr[0], evals[-1][0]):
                verts[-1], evals[-1] = contract, fc
            else:
                best_v = verts[0]
                verts = [verts[0]] + [
                    [b + 0.5 * (v - b) for b, v in zip(best_v, vv)] for vv in verts[1:]
                ]
                evals = [evals[0]] + [objective(v) for v in verts[1:]]

    candidates = [(f0, chi0, p0)] + evals
    best = min(candidates, key=lambda t: t[0])
    g2, chi, point = best
    return _record_from_point(
        point, formula, chi, g2, "refined", evaluations, skipped, converged
    )


@dataclass(frozen=True)
class TableRow:
    """One row of the optimal-phase benchmark reproduction."""

    r: float
    eta_mag: float
    chi_mag: float | None
    g2: float | None
    reference: float
    feasible: bool

    @property
    def deviation(self) -> float | None:
        return None if self.g2 is None else self.g2 - self.reference


def table_s1(r_values, eta_fixed: float, references=None, norm_tol: float = analytic.NORM_TOL) -> list[TableRow]:
    """Evaluate the optimal-phase g2 at fixed |eta| for each r.

    |chi| comes from the normalization constraint; rows where no normalized
    state exists for the requested |eta| are reported as infeasible rather
    than raising, so the full reproduction table can always be printed.
    """
    if references is None:
        references = [math.nan] * len(list(r_values))
    rows = []
    for r, ref in zip(r_values, references):
        xi = SqueezeParam(r, math.pi)
        zeta = SqueezeParam(r, 0.0)
        try:
            chi = analytic.solve_chi(eta_fixed, xi, zeta, math.pi)
        except InfeasibleAmplitudeError:
            rows.append(TableRow(r, eta_fixed, None, None, ref, False))
            continue
        g2 = analytic.g2_optimal(r, chi, eta_fixed, norm_tol)
        rows.append(TableRow(r, eta_fixed, chi, g2, ref, True))
    return rows
