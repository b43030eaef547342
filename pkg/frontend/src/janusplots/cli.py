"""Command line: render scan files into figures.

Exit codes: 0 success, 2 missing/unparsable input or bad recipe, 4 write error.
"""

from __future__ import annotations

import argparse
import sys

from .recipes import TITLES, FigureRecipe, preset_recipe
from .render import render
from .scanfile import ScanFileError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="janusplots",
        description="Regenerate publication-style figures from janusg2 scan files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    rp = sub.add_parser("render", help="render one figure")
    rp.add_argument("--fig", required=True, choices=sorted(TITLES),
                    help="figure preset id")
    rp.add_argument("--in", dest="inputs", action="append", required=True,
                    metavar="FILE", help="input scan file (repeatable)")
    rp.add_argument("--out", required=True, help="output image path")
    rp.add_argument("--contours", default=None,
                    help="comma-separated strictly increasing contour levels")
    rp.add_argument("--vmin", type=float, default=None)
    rp.add_argument("--vmax", type=float, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        recipe = preset_recipe(args.fig, args.inputs, args.out)
        overrides = {}
        if args.contours is not None:
            overrides["contour_levels"] = tuple(float(t) for t in args.contours.split(","))
        if args.vmin is not None or args.vmax is not None:
            lims = recipe.color_limits or (None, None)
            overrides["color_limits"] = (
                args.vmin if args.vmin is not None else lims[0],
                args.vmax if args.vmax is not None else lims[1],
            )
        if overrides:
            recipe = FigureRecipe(
                inputs=recipe.inputs, figure_id=recipe.figure_id, output=recipe.output,
                contour_levels=overrides.get("contour_levels", recipe.contour_levels),
                color_limits=overrides.get("color_limits", recipe.color_limits),
            )
        info = render(recipe)
    except (ScanFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write figure: {exc}", file=sys.stderr)
        return 4
    print(f"{info.output}: min g2 = {info.min_value:.6g} at {info.min_coords}, "
          f"{info.masked_cells} infeasible cells masked")
    return 0


if __name__ == "__main__":
    sys.exit(main())
