"""Figure regeneration from janusg2 scan files (strict file-contract consumer)."""

__version__ = "0.1.0"

from .recipes import FigureRecipe, preset_recipe
from .render import RenderInfo, render
from .scanfile import ScanData, ScanFileError, load_scan

__all__ = [
    "__version__",
    "FigureRecipe",
    "preset_recipe",
    "RenderInfo",
    "render",
    "ScanData",
    "ScanFileError",
    "load_scan",
]
