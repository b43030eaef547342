"""Figure recipes: presentation parameters per reproduction figure."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .scanfile import ScanFileError, load_scan

DEFAULT_CONTOURS = (0.6, 0.8, 1.0, 1.5, 2.0, 3.0)

# Axis captions by parameter name.
AXIS_LABELS = {
    "r": "squeezing magnitude r",
    "s": "squeezing magnitude s",
    "Delta": "relative orientation Delta (rad)",
    "delta": "superposition phase delta (rad)",
    "eta": "amplitude |eta|",
}

TITLES = {
    "1": "Lower boundary of g2 vs squeezing",
    "2a": "Unequal squeezing (r=0.7, s=0.3), delta=pi",
    "2b": "Unequal squeezing (r=0.6, s=0.4), delta=pi",
    "3a": "Phase-amplitude map, r=s=0.3, delta=pi",
    "3b": "Phase-amplitude map, r=s=0.4, delta=pi",
    "3c": "Phase-amplitude map, r=s=0.5, delta=pi",
    "3d": "Phase-amplitude map, r=s=0.6, delta=pi",
    "4": "Nonoptimal phases Delta=pi, delta=0",
    "4b": "Quadrature-offset phases Delta=delta=pi/2",
    "5": "Optimal-phase basin, Delta=delta=pi",
}


@dataclass(frozen=True)
class FigureRecipe:
    """Inputs and presentation parameters for one rendered figure."""

    inputs: tuple[str, ...]
    figure_id: str
    output: str
    contour_levels: tuple[float, ...] = DEFAULT_CONTOURS
    color_limits: tuple[float, float] | None = None

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("a recipe needs at least one input file")
        levels = tuple(self.contour_levels)
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError(f"contour levels must be strictly increasing, got {levels}")
        object.__setattr__(self, "inputs", tuple(str(p) for p in self.inputs))
        object.__setattr__(self, "contour_levels", levels)

    def load(self):
        """Load and validate every input scan."""
        scans = []
        for p in self.inputs:
            if not Path(p).exists():
                raise ScanFileError(f"input file {p} does not exist")
            scans.append(load_scan(p))
        return scans


def preset_recipe(figure_id: str, inputs, output) -> FigureRecipe:
    if figure_id not in TITLES:
        raise ValueError(f"unknown figure id {figure_id!r}; expected one of {sorted(TITLES)}")
    limits = (0.55, 1.0) if figure_id == "5" else None
    return FigureRecipe(
        inputs=tuple(inputs), figure_id=figure_id, output=str(output), color_limits=limits
    )
