"""Gridded g2 surfaces and their on-disk formats.

A ScanResult is the evaluation of one GridSpec under one formula. Infeasible
points are kept explicitly (NaN value plus a reason code in memory, an empty
CSV field or JSON null on disk; never the text "NaN", which does not survive
every JSON parser). Values are serialized with 17 significant digits so a
round trip is bit-identical.
"""

from __future__ import annotations

import datetime as _dt
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__, analytic, optimize
from .errors import ScanFormatError
from .params import Axis, GridSpec

FORMATS = ("csv", "json")
_MAGIC = "janusg2-scan v1"

__all__ = ["ScanResult", "run_scan", "write_scan", "read_scan", "boundary_scan"]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


@dataclass
class ScanResult:
    """Values (NaN = infeasible) over a grid, plus reason codes and metadata."""

    spec: GridSpec
    formula: str
    values: np.ndarray
    reasons: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float).reshape(self.spec.shape)
        self.reasons = np.asarray(self.reasons, dtype=np.uint8).reshape(self.spec.shape)

    def min_value(self) -> float:
        finite = self.values[np.isfinite(self.values)]
        if finite.size == 0:
            return math.nan
        return float(finite.min())

    def min_point(self):
        """(axis values..., g2) of the smallest finite cell, row-major tie-break."""
        flat = self.values.reshape(-1)
        best = None
        for i, v in enumerate(flat):
            if math.isfinite(v) and (best is None or v < flat[best]):
                best = i
        if best is None:
            return None
        idx = np.unravel_index(best, self.spec.shape)
        coords = tuple(axis.grid()[k] for axis, k in zip(self.spec.axes, idx))
        return coords + (float(flat[best]),)


def _now_iso() -> str:
    return _dt.datetime.now(_dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _base_meta(norm_tol: float) -> dict:
    return {
        "engine_version": __version__,
        "timestamp": _now_iso(),
        "norm_tol": norm_tol,
    }


def run_scan(spec: GridSpec, formula: str, norm_tol: float = analytic.NORM_TOL) -> ScanResult:
    """Fill a grid with g2 values; infeasible points become NaN plus a reason code."""
    optimize.validate_formula(spec, formula)
    shape = spec.shape
    values = np.full(shape, np.nan)
    reasons = np.zeros(shape, dtype=np.uint8)
    grids = [axis.grid() for axis in spec.axes]
    for idx in np.ndindex(*shape):
        axis_values = tuple(grids[d][k] for d, k in enumerate(idx))
        point = optimize.point_from_spec(spec, axis_values)
        g2, _chi, reason = optimize.evaluate_point(point, formula, norm_tol)
        reasons[idx] = reason
        if reason == optimize.REASON_OK:
            values[idx] = g2
    return ScanResult(spec, formula, values, reasons, _base_meta(norm_tol))


def boundary_scan(lo: float, hi: float, points: int) -> ScanResult:
    """1-D boundary-curve scan over r, via the substitution code path."""
    axis = Axis("r", lo, hi, points)
    spec = GridSpec(axes=(axis,), fixed={})
    pairs = optimize.boundary_curve(axis.grid())
    values = np.array([g for _r, g in pairs])
    reasons = np.zeros(points, dtype=np.uint8)
    return ScanResult(spec, "boundary", values, reasons, _base_meta(analytic.NORM_TOL))


# ---------------------------------------------------------------------------
# CSV


def _write_csv(result: ScanResult, fh) -> None:
    fh.write(f"# {_MAGIC}\n")
    fh.write(f"# formula: {result.formula}\n")
    for key in sorted(result.meta):
        fh.write(f"# meta: {key}={result.meta[key]}\n")
    for name in sorted(result.spec.fixed):
        fh.write(f"# fixed: {name}={_fmt(result.spec.fixed[name])}\n")
    for axis in result.spec.axes:
        fh.write(f"# axis: {axis.name} {_fmt(axis.lo)} {_fmt(axis.hi)} {axis.points}\n")
    fh.write(",".join([a.name for a in result.spec.axes] + ["g2"]) + "\n")
    grids = [axis.grid() for axis in result.spec.axes]
    flat = result.values.reshape(-1)
    for i, idx in enumerate(np.ndindex(*result.spec.shape)):
        coords = [_fmt(grids[d][k]) for d, k in enumerate(idx)]
        v = flat[i]
        coords.append(_fmt(v) if math.isfinite(v) else "")
        fh.write(",".join(coords) + "\n")


def _parse_csv(lines) -> ScanResult:
    formula = None
    meta = {}
    fixed = {}
    axes = []
    header_seen = False
    values = []
    reasons = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if lineno == 1:
                if body != _MAGIC:
                    raise ScanFormatError(f"unrecognized header {body!r}", lineno, 1)
                continue
            try:
                key, _, rest = body.partition(":")
                key = key.strip()
                rest = rest.strip()
                if key == "formula":
                    formula = rest
                elif key == "meta":
                    mk, _, mv = rest.partition("=")
                    # the reason-code digit string must stay a string
                    meta[mk] = mv if mk == "_reasons" else _coerce_meta(mv)
                elif key == "fixed":
                    fk, _, fv = rest.partition("=")
                    fixed[fk] = float(fv)
                elif key == "axis":
                    name, lo, hi, points = rest.split()
                    axes.append(Axis(name, float(lo), float(hi), int(points)))
                else:
                    raise ValueError(f"unknown comment key {key!r}")
            except ScanFormatError:
                raise
            except Exception as exc:
                raise ScanFormatError(f"bad comment line: {exc}", lineno, 1) from exc
            continue
        if not header_seen:
            expected = [a.name for a in axes] + ["g2"]
            got = line.split(",")
            if got != expected:
                raise ScanFormatError(
                    f"column header {got!r} does not match axes {expected!r}", lineno, 1
                )
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != len(axes) + 1:
            raise ScanFormatError(
                f"expected {len(axes) + 1} fields, got {len(parts)}", lineno, 1
            )
        cell = parts[-1]
        if cell == "":
            values.append(math.nan)
            reasons.append(optimize.REASON_INFEASIBLE)
        else:
            try:
                values.append(float(cell))
            except ValueError as exc:
                col = line.rfind(cell) + 1
                raise ScanFormatError(f"bad number {cell!r}", lineno, col) from exc
            reasons.append(optimize.REASON_OK)
    if formula is None or not axes or not header_seen:
        raise ScanFormatError("incomplete scan file", 1, 1)
    spec = GridSpec(axes=tuple(axes), fixed=fixed)
    expected = int(np.prod(spec.shape))
    if len(values) != expected:
        raise ScanFormatError(
            f"expected {expected} data rows, got {len(values)}", 1, 1
        )
    stored = meta.pop("_reasons", None)
    rs = np.array(reasons, dtype=np.uint8)
    if stored is not None:
        rs = np.array([int(c) for c in stored], dtype=np.uint8)
    return ScanResult(spec, formula, np.array(values), rs, meta)


def _coerce_meta(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


# ---------------------------------------------------------------------------
# JSON


def _write_json(result: ScanResult, fh) -> None:
    flat = result.values.reshape(-1)
    doc = {
        "format": _MAGIC,
        "formula": result.formula,
        "spec": {
            "axes": [
                {"name": a.name, "lo": a.lo, "hi": a.hi, "points": a.points}
                for a in result.spec.axes
            ],
            "fixed": dict(sorted(result.spec.fixed.items())),
        },
        "values": [float(v) if math.isfinite(v) else None for v in flat],
        "reasons": [int(c) for c in result.reasons.reshape(-1)],
        "meta": dict(sorted(result.meta.items())),
    }
    json.dump(doc, fh, indent=1)
    fh.write("\n")


def _parse_json(text: str) -> ScanResult:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScanFormatError(exc.msg, exc.lineno, exc.colno) from exc
    try:
        if doc["format"] != _MAGIC:
            raise ScanFormatError(f"unrecognized format {doc['format']!r}", 1, 1)
        axes = tuple(
            Axis(a["name"], float(a["lo"]), float(a["hi"]), int(a["points"]))
            for a in doc["spec"]["axes"]
        )
        spec = GridSpec(axes=axes, fixed={k: float(v) for k, v in doc["spec"]["fixed"].items()})
        values = np.array(
            [math.nan if v is None else float(v) for v in doc["values"]], dtype=float
        )
        reasons = np.array([int(c) for c in doc["reasons"]], dtype=np.uint8)
        return ScanResult(spec, doc["formula"], values, reasons, dict(doc["meta"]))
    except ScanFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ScanFormatError(f"malformed scan document: {exc}", 1, 1) from exc


def write_scan(result: ScanResult, path, format: str = "csv") -> None:
    """Serialize a ScanResult; see the module docstring for the layouts."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if format == "csv":
            # Reason codes ride along in a meta comment so CSV round-trips losslessly.
            result = ScanResult(
                result.spec,
                result.formula,
                result.values,
                result.reasons,
                {**result.meta, "_reasons": "".join(str(int(c)) for c in result.reasons.reshape(-1))},
            )
            _write_csv(result, fh)
        else:
            _write_json(result, fh)


def read_scan(path, format: str = "csv") -> ScanResult:
    """Inverse of :func:`write_scan`."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    with open(path, encoding="utf-8") as fh:
        if format == "csv":
            return _parse_csv(fh)
        return _parse_json(fh.read())
