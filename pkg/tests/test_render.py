"""Rendering: determinism, golden files, and SVG/CSV consistency."""

import pathlib
import re
from fractions import Fraction as Q

import pytest

from weylalt import diagram, emit_csv, emit_svg, emit_tikz
from weylalt.render import DEFAULT_PALETTE, embed, fmt6, palette_color, palette_marker

GOLDEN = pathlib.Path(__file__).parent / "golden"

GRIDS = {
    "a2_mu0_w4": ("A2", (Q(0), Q(0)), 4),
    "d2_mu0_w8": ("D2", (Q(0), Q(0)), 8),
    "b2_mu1-2_w6": ("B2", (Q(1), Q(2)), 6),
}


def _grid(name):
    alg, mu, w = GRIDS[name]
    return diagram(alg, mu, w)


@pytest.mark.parametrize("name", sorted(GRIDS))
@pytest.mark.parametrize("emit,ext", [(emit_svg, "svg"), (emit_csv, "csv"), (emit_tikz, "tikz")])
def test_golden_files(name, emit, ext):
    data = emit(_grid(name))
    expected = (GOLDEN / f"{name}.{ext}").read_bytes()
    assert data == expected


@pytest.mark.parametrize("name", sorted(GRIDS))
def test_determinism_across_runs(name):
    g1, g2 = _grid(name), _grid(name)
    assert emit_svg(g1) == emit_svg(g2)
    assert emit_csv(g1) == emit_csv(g2)
    assert emit_tikz(g1) == emit_tikz(g2)


def test_csv_structure():
    grid = _grid("a2_mu0_w4")
    text = emit_csv(grid).decode("utf-8")
    assert text.endswith("\n") and "\r" not in text
    lines = text.strip().split("\n")
    assert lines[0] == "c1,c2,set"
    assert len(lines) == 1 + 9 * 9
    assert "0,0,e" in lines
    assert "3,0,e.s2" in lines


def test_csv_svg_consistency():
    grid = _grid("b2_mu1-2_w6")
    csv_nonempty = sum(
        1
        for line in emit_csv(grid).decode().strip().split("\n")[1:]
        if line.split(",")[2]
    )
    svg = emit_svg(grid).decode()
    body = svg.split("<g", 1)[0]  # markers come before the legend group
    circles = len(re.findall(r"<circle", body))
    assert circles == csv_nonempty


def test_svg_legend_completeness():
    grid = _grid("d2_mu0_w8")
    svg = emit_svg(grid).decode()
    body, legend = svg.split("<g", 1)
    used = set(re.findall(r'fill="(#[0-9a-f]{6})"', body))
    legend_colors = re.findall(r'fill="(#[0-9a-f]{6})"', legend)
    assert used == set(legend_colors)
    assert len(legend_colors) == len(set(legend_colors)) == len(grid.key) == 4


def test_tikz_fill_per_nonempty_cell():
    grid = _grid("d2_mu0_w8")
    tikz = emit_tikz(grid).decode()
    nonempty = sum(1 for s in grid.cells.values() if s.indices)
    fills = tikz.count("\\fill[") - len(grid.key)  # legend swatches excluded
    assert fills == nonempty
    assert tikz.startswith("\\begin{tikzpicture}")
    assert tikz.rstrip().endswith("\\end{tikzpicture}")


def test_empty_grid_renders_axes_only():
    grid = diagram("B2", (Q(1), Q(1)), (0, 0, 0, 0))  # gate fails everywhere
    assert len(grid.key) == 0
    svg = emit_svg(grid).decode()
    assert "<circle" not in svg and "<line" in svg
    tikz = emit_tikz(grid).decode()
    assert "\\fill" not in tikz and "\\draw" in tikz


def test_fmt6_rules():
    assert fmt6(0.0) == "0.000000"
    assert fmt6(-0.0000001) == "0.000000"
    assert fmt6(1.5) == "1.500000"
    assert fmt6(2.0000005) == "2.000000" or fmt6(2.0000005) == "2.000001"
    # the formatting of the binary double is exact and platform-independent
    import math

    assert fmt6(math.sqrt(3) / 2) == "0.866025"


def test_embeddings():
    assert embed("D2", (Q(1), Q(0))) == (1.0, 0.0)
    assert embed("B2", (Q(1), Q(1))) == (1.0, 1.0)  # omega1
    assert embed("C2", (Q(1), Q(1))) == (1.0, 1.0)  # omega2
    x, y = embed("A2", (Q(0), Q(1)))
    assert (round(x, 6), round(y, 6)) == (-0.5, 0.866025)
    x, y = embed("G2", (Q(0), Q(1)))
    assert (round(x, 6), round(y, 6)) == (-1.5, 0.866025)


def test_palette_cycling_and_markers():
    assert len(DEFAULT_PALETTE) == 24
    assert len(set(DEFAULT_PALETTE)) == 24
    assert palette_color(DEFAULT_PALETTE, 25) == DEFAULT_PALETTE[1]
    assert palette_marker(DEFAULT_PALETTE, 3) == "circle"
    assert palette_marker(DEFAULT_PALETTE, 27) == "square"
