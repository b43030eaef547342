"""Published reference values and frozen figure-scan domains.

The figure presets are the single source of truth for the reproduction scans:
the CLI, the tests, and the plotting frontend all read the same definitions.

REFERENCE_TABLE holds the published benchmark g2 values along the optimal
phase configuration (Delta = delta = pi, equal squeezing) at fixed
|eta| = 2.20070. The deviation of a faithful evaluation from these values is
reported by ``janusg2 optimize --mode table-s1``; see the README for the
reproduction status of each benchmark.
"""

from __future__ import annotations

import math

from .params import Axis, GridSpec

REFERENCE_ETA = 2.20070

# (r, published g2) rows of the fixed-|eta| benchmark table.
REFERENCE_TABLE = (
    (0.26, 0.58418),
    (0.28, 0.57467),
    (0.30, 0.56942),
    (0.32, 0.56770),
    (0.34, 0.56740),
    (0.36, 0.56930),
    (0.38, 0.57245),
    (0.40, 0.57723),
)

# Published sweet-spot window: g2 range, r range, |eta| range.
SWEET_SPOT_BOX = {
    "g2": (0.5670, 0.5678),
    "r": (0.32, 0.36),
    "eta": (2.19, 2.21),
}

_PI = math.pi
_RES = 256


def _phase_amp_axes(points: int = _RES) -> tuple[Axis, Axis]:
    return (Axis("Delta", 0.0, 2.0 * _PI, points), Axis("eta", 0.0, 3.0, points))


def _r_amp_axes(points: int = _RES) -> tuple[Axis, Axis]:
    return (Axis("r", 1.0 / points, 1.0, points), Axis("eta", 0.0, 3.0, points))


def figure_presets(points: int = _RES) -> dict:
    """Scan definitions keyed by figure id.

    Values are (GridSpec, formula); the boundary preset "1" is 1-D and uses
    the dedicated boundary code path.
    """
    return {
        "1": (GridSpec(axes=(Axis("r", 2.0 / (2 * points), 2.0, 2 * points),), fixed={}), "boundary"),
        "2a": (GridSpec(axes=_phase_amp_axes(points), fixed={"r": 0.7, "s": 0.3, "delta": _PI}), "general"),
        "2b": (GridSpec(axes=_phase_amp_axes(points), fixed={"r": 0.6, "s": 0.4, "delta": _PI}), "general"),
        "3a": (GridSpec(axes=_phase_amp_axes(points), fixed={"r": 0.3, "delta": _PI}), "equal"),
        "3b": (GridSpec(axes=_phase_amp_axes(points), fixed={"r": 0.4, "delta": _PI}), "equal"),
        "3c": (GridSpec(axes=_phase_amp_axes(points), fixed={"r": 0.5, "delta": _PI}), "equal"),
        "3d": (GridSpec(axes=_phase_amp_axes(points), fixed={"r": 0.6, "delta": _PI}), "equal"),
        "4": (GridSpec(axes=_r_amp_axes(points), fixed={"Delta": _PI, "delta": 0.0}), "equal"),
        "4b": (GridSpec(axes=_r_amp_axes(points), fixed={"Delta": _PI / 2, "delta": _PI / 2}), "equal"),
        "5": (GridSpec(axes=_r_amp_axes(points), fixed={"Delta": _PI, "delta": _PI}), "optimal"),
    }


PRESET_IDS = tuple(figure_presets())
