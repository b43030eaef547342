"""Independent reader for the scan-file contract.

The plotting layer never evaluates physics: these files are its only input.
The formats (produced by the primary package's scan writer) are:

CSV:  a "# janusg2-scan v1" magic line, "# formula:", "# meta: key=value",
      "# fixed: name=value" and "# axis: name lo hi points" comment lines,
      a column-header row of the axis names plus "g2", then one row per grid
      point in row-major axis order. Infeasible cells have an empty g2 field.

JSON: {"format": "janusg2-scan v1", "formula", "spec": {"axes", "fixed"},
       "values": [... null for infeasible ...], "reasons", "meta"}.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

MAGIC = "janusg2-scan v1"


class ScanFileError(Exception):
    """Unparsable or inconsistent scan file."""


@dataclass(frozen=True)
class ScanAxis:
    name: str
    lo: float
    hi: float
    points: int

    def grid(self) -> np.ndarray:
        step = (self.hi - self.lo) / (self.points - 1)
        return self.lo + step * np.arange(self.points)


@dataclass
class ScanData:
    """One loaded scan: masked values over the declared axes."""

    formula: str
    axes: tuple[ScanAxis, ...]
    fixed: dict
    values: np.ndarray  # float array, NaN at infeasible cells
    meta: dict = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(a.points for a in self.axes)

    @property
    def masked(self) -> np.ma.MaskedArray:
        return np.ma.masked_invalid(self.values)

    def min_entry(self):
        """(value, axis coordinates) of the smallest finite cell."""
        if not np.isfinite(self.values).any():
            raise ScanFileError("scan has no finite values")
        flat = np.nanargmin(self.values)
        idx = np.unravel_index(flat, self.shape)
        coords = tuple(float(ax.grid()[k]) for ax, k in zip(self.axes, idx))
        return float(self.values[idx]), coords


def _load_csv(path) -> ScanData:
    formula = None
    fixed = {}
    meta = {}
    axes: list[ScanAxis] = []
    values: list[float] = []
    header_seen = False
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].lstrip("# ").strip() != MAGIC:
        raise ScanFileError(f"{path}: missing '{MAGIC}' header")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, _, rest = body.partition(":")
            key, rest = key.strip(), rest.strip()
            try:
                if key == "formula":
                    formula = rest
                elif key == "fixed":
                    name, _, value = rest.partition("=")
                    fixed[name] = float(value)
                elif key == "axis":
                    name, lo, hi, points = rest.split()
                    axes.append(ScanAxis(name, float(lo), float(hi), int(points)))
                elif key == "meta":
                    mk, _, mv = rest.partition("=")
                    meta[mk] = mv
                else:
                    raise ValueError(f"unknown comment key {key!r}")
            except ValueError as exc:
                raise ScanFileError(f"{path}:{lineno}: {exc}") from exc
            continue
        if not header_seen:
            expected = [a.name for a in axes] + ["g2"]
            if line.split(",") != expected:
                raise ScanFileError(f"{path}:{lineno}: header {line!r} != {expected}")
            header_seen = True
            continue
        cell = line.split(",")[-1]
        values.append(math.nan if cell == "" else float(cell))
    if formula is None or not axes or not header_seen:
        raise ScanFileError(f"{path}: incomplete scan file")
    shape = tuple(a.points for a in axes)
    if len(values) != int(np.prod(shape)):
        raise ScanFileError(f"{path}: expected {int(np.prod(shape))} rows, got {len(values)}")
    return ScanData(formula, tuple(axes), fixed, np.array(values).reshape(shape), meta)


def _load_json(path) -> ScanData:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScanFileError(f"{path}: {exc}") from exc
    try:
        if doc["format"] != MAGIC:
            raise ScanFileError(f"{path}: unexpected format {doc['format']!r}")
        axes = tuple(
            ScanAxis(a["name"], float(a["lo"]), float(a["hi"]), int(a["points"]))
            for a in doc["spec"]["axes"]
        )
        fixed = {k: float(v) for k, v in doc["spec"]["fixed"].items()}
        shape = tuple(a.points for a in axes)
        values = np.array(
            [math.nan if v is None else float(v) for v in doc["values"]]
        ).reshape(shape)
        return ScanData(doc["formula"], axes, fixed, values, dict(doc.get("meta", {})))
    except ScanFileError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ScanFileError(f"{path}: malformed document: {exc}") from exc


def load_scan(path) -> ScanData:
    """Load a scan file, inferring the format from its first byte."""
    with open(path, "rb") as fh:
        first = fh.read(1)
    if first == b"{":
        return _load_json(path)
    return _load_csv(path)
