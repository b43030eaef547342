"""Rendering: every preset produces an image, annotations come from the file."""

import math
from pathlib import Path

import numpy as np
import pytest

from janusplots import FigureRecipe, load_scan, preset_recipe, render
from janusplots.cli import main
from janusplots.render import MASK_COLOR

FIXTURES = Path(__file__).parent / "fixtures"

PRESET_FILES = {
    "1": "fig1.csv",
    "2a": "fig2a.csv",
    "2b": "fig2b.csv",
    "3a": "fig3a.csv",
    "3b": "fig3b.json",
    "3c": "fig3c.csv",
    "3d": "fig3d.csv",
    "4": "fig4.csv",
    "4b": "fig4b.csv",
    "5": "fig5.json",
}


@pytest.mark.parametrize("fig_id,fixture", sorted(PRESET_FILES.items()))
def test_presets_render_and_annotate_file_minimum(tmp_path, fig_id, fixture):
    out = tmp_path / f"fig{fig_id}.png"
    recipe = preset_recipe(fig_id, [FIXTURES / fixture], out)
    info = render(recipe)
    assert out.exists() and out.stat().st_size > 5000
    file_min, file_coords = load_scan(FIXTURES / fixture).min_entry()
    assert info.min_value == file_min  # exact: no recomputation in the plot layer
    assert info.min_coords == file_coords


def test_masked_cells_visibly_distinct(tmp_path):
    from matplotlib import image as mpimg

    out = tmp_path / "fig5.png"
    info = render(preset_recipe("5", [FIXTURES / "fig5.json"], out))
    assert info.masked_cells > 0
    img = mpimg.imread(out)  # float RGBA in [0, 1]
    gray = np.array(MASK_COLOR[:3])
    dist = np.linalg.norm(img[:, :, :3] - gray, axis=2)
    assert (dist < 0.02).sum() > 100  # neutral-gray pixels present
    # and the gray is not part of the colormap at the used range
    from matplotlib import colormaps

    cmap_cols = colormaps["coolwarm"](np.linspace(0, 1, 64))[:, :3]
    assert np.linalg.norm(cmap_cols - gray, axis=1).min() > 0.1


def test_degenerate_all_null_scan_renders(tmp_path):
    out = tmp_path / "empty.png"
    info = render(preset_recipe("3a", [FIXTURES / "degenerate2x2.csv"], out))
    assert out.exists() and out.stat().st_size > 1000
    assert math.isnan(info.min_value)
    assert info.masked_cells == 4


def test_rerender_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    render(preset_recipe("3a", [FIXTURES / "fig3a.csv"], a))
    render(preset_recipe("3a", [FIXTURES / "fig3a.csv"], b))
    assert a.read_bytes() == b.read_bytes()


def test_recipe_validation(tmp_path):
    with pytest.raises(ValueError):
        FigureRecipe(inputs=(), figure_id="1", output=str(tmp_path / "x.png"))
    with pytest.raises(ValueError):
        FigureRecipe(inputs=("a.csv",), figure_id="1", output="x.png",
                     contour_levels=(1.0, 0.5))
    with pytest.raises(ValueError):
        preset_recipe("99", ["a.csv"], "x.png")


class TestCli:
    def test_render_success(self, tmp_path, capsys):
        out = tmp_path / "fig1.png"
        code = main(["render", "--fig", "1", "--in", str(FIXTURES / "fig1.csv"),
                     "--out", str(out)])
        assert code == 0
        assert out.exists()
        assert "min g2" in capsys.readouterr().out

    def test_missing_input(self, tmp_path, capsys):
        code = main(["render", "--fig", "1", "--in", str(tmp_path / "none.csv"),
                     "--out", str(tmp_path / "x.png")])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_unparsable_input(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("nonsense\n")
        code = main(["render", "--fig", "1", "--in", str(bad),
                     "--out", str(tmp_path / "x.png")])
        assert code == 2

    def test_custom_contours(self, tmp_path):
        out = tmp_path / "fig3a.png"
        code = main(["render", "--fig", "3a", "--in", str(FIXTURES / "fig3a.csv"),
                     "--out", str(out), "--contours", "0.7,0.9,1.0,2.0",
                     "--vmin", "0.5", "--vmax", "2.0"])
        assert code == 0
        assert out.exists()

    def test_bad_contours_rejected(self, tmp_path):
        code = main(["render", "--fig", "3a", "--in", str(FIXTURES / "fig3a.csv"),
                     "--out", str(tmp_path / "x.png"), "--contours", "2,1"])
        assert code == 2
