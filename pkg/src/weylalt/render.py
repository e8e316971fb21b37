"""Deterministic SVG / CSV / TikZ emission for alternation diagrams.

Plane embeddings send the simple roots to fixed vectors whose entries are
p + q*sqrt(d) with rational p, q.  Coordinates are printed with exactly six
fractional digits so output is byte-identical across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Tuple

from .geometry import DiagramGrid
from .multiplicity import AltSet
from .rootsys import check_algebra
from .weightlat import to_root_basis

# (p, q) pairs meaning p + q*sqrt(d); one (vector, vector, d) triple per
# algebra, columns are the images of alpha1 and alpha2.
_EMBEDDING: Dict[str, Tuple[Tuple[Tuple[Q, Q], Tuple[Q, Q]], Tuple[Tuple[Q, Q], Tuple[Q, Q]], int]] = {
    "A2": (((Q(1), Q(0)), (Q(0), Q(0))), ((Q(-1, 2), Q(0)), (Q(0), Q(1, 2))), 3),
    "B2": (((Q(0), Q(0)), (Q(2), Q(0))), ((Q(1), Q(0)), (Q(-1), Q(0))), 1),
    "C2": (((Q(1), Q(0)), (Q(-1), Q(0))), ((Q(0), Q(0)), (Q(2), Q(0))), 1),
    "D2": (((Q(1), Q(0)), (Q(0), Q(0))), ((Q(0), Q(0)), (Q(1), Q(0))), 1),
    "G2": (((Q(1), Q(0)), (Q(0), Q(0))), ((Q(-3, 2), Q(0)), (Q(0), Q(1, 2))), 3),
}

DEFAULT_PALETTE: Tuple[str, ...] = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1",
    "#000075", "#808080", "#5a2a6e", "#2f4f4f", "#d2691e", "#1e90ff",
)


def palette_color(palette: Tuple[str, ...], index: int) -> str:
    return palette[index % len(palette)]


def palette_marker(palette: Tuple[str, ...], index: int) -> str:
    """Past one full color cycle the marker shape changes instead."""
    return "circle" if (index // len(palette)) % 2 == 0 else "square"


def embed(alg: str, root_coords: Tuple[Q, Q]) -> Tuple[float, float]:
    """Plane position of a weight given in root-basis coordinates."""
    (e1x, e1y), (e2x, e2y), d = _EMBEDDING[check_algebra(alg)]
    sq = math.sqrt(d)
    a, b = Q(root_coords[0]), Q(root_coords[1])

    def val(pq1: Tuple[Q, Q], pq2: Tuple[Q, Q]) -> float:
        p = a * pq1[0] + b * pq2[0]
        q = a * pq1[1] + b * pq2[1]
        return float(p) + float(q) * sq

    return (val(e1x, e2x), val(e1y, e2y))


def fmt6(x: float) -> str:
    # IEEE doubles formatted at 6 fractional digits round half-even; -0 is
    # normalised away so platforms cannot disagree on the sign of zero.
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _cell_positions(grid: DiagramGrid) -> List[Tuple[Tuple[int, int], Tuple[float, float]]]:
    out = []
    for point in grid.points():
        root = to_root_basis(grid.alg, (Q(point[0]), Q(point[1]))) \
            if grid.alg != "G2" else (Q(point[0]), Q(point[1]))
        out.append((point, embed(grid.alg, root)))
    return out


def _set_words(s: AltSet) -> str:
    return ".".join(s.words())


_SCALE = 24.0
_RADIUS = 7.0
_MARGIN = 40.0
_LEGEND_WIDTH = 220.0


def emit_csv(grid: DiagramGrid) -> bytes:
    lines = ["c1,c2,set"]
    for (c1, c2) in grid.points():
        s = grid.cells[(c1, c2)]
        lines.append(f"{c1},{c2},{_set_words(s)}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _bounds(positions) -> Tuple[float, float, float, float]:
    xs = [p[0] for _, p in positions]
    ys = [p[1] for _, p in positions]
    return (min(xs), max(xs), min(ys), max(ys))


def emit_svg(grid: DiagramGrid, palette: Tuple[str, ...] = DEFAULT_PALETTE) -> bytes:
    positions = _cell_positions(grid)
    x0, x1, y0, y1 = _bounds(positions)
    width = (x1 - x0) * _SCALE + 2 * _MARGIN + _LEGEND_WIDTH
    height = (y1 - y0) * _SCALE + 2 * _MARGIN

    def px(x: float) -> float:
        return _MARGIN + (x - x0) * _SCALE

    def py(y: float) -> float:
        return _MARGIN + (y1 - y) * _SCALE  # SVG y axis points down

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt6(width)}" height="{fmt6(height)}" '
        f'viewBox="0 0 {fmt6(width)} {fmt6(height)}">',
        f"<!-- {grid.alg} alternation diagram, mu=({grid.mu[0]},{grid.mu[1]}), "
        f"window={grid.window} -->",
    ]
    # Axis lines along the embedded simple-root directions.
    for root in ((Q(1), Q(0)), (Q(0), Q(1))):
        dx, dy = embed(grid.alg, root)
        norm = math.hypot(dx, dy)
        reach = max(x1 - x0, y1 - y0) * 1.2 + 1.0
        ux, uy = dx / norm * reach, dy / norm * reach
        out.append(
            f'<line x1="{fmt6(px(-ux))}" y1="{fmt6(py(-uy))}" '
            f'x2="{fmt6(px(ux))}" y2="{fmt6(py(uy))}" '
            'stroke="#cccccc" stroke-width="1"/>'
        )
    for (point, (x, y)) in positions:
        s = grid.cells[point]
        if not s.indices:
            continue
        k = grid.color_index(s)
        color = palette_color(palette, k)
        if palette_marker(palette, k) == "circle":
            out.append(
                f'<circle cx="{fmt6(px(x))}" cy="{fmt6(py(y))}" '
                f'r="{fmt6(_RADIUS)}" fill="{color}"/>'
            )
        else:
            out.append(
                f'<rect x="{fmt6(px(x) - _RADIUS)}" y="{fmt6(py(y) - _RADIUS)}" '
                f'width="{fmt6(2 * _RADIUS)}" height="{fmt6(2 * _RADIUS)}" '
                f'fill="{color}"/>'
            )
    # Legend: one swatch per key entry, in key order.
    lx = (x1 - x0) * _SCALE + 2 * _MARGIN
    out.append(f'<g font-family="monospace" font-size="12">')
    for k, s in enumerate(grid.key):
        color = palette_color(palette, k)
        sy = _MARGIN + k * 20.0
        out.append(
            f'<rect x="{fmt6(lx)}" y="{fmt6(sy - 10.0)}" width="12.000000" '
            f'height="12.000000" fill="{color}"/>'
        )
        out.append(
            f'<text x="{fmt6(lx + 18.0)}" y="{fmt6(sy)}">{s.describe()}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def emit_tikz(grid: DiagramGrid, palette: Tuple[str, ...] = DEFAULT_PALETTE) -> bytes:
    positions = _cell_positions(grid)
    x0, x1, y0, y1 = _bounds(positions)
    out = ["\\begin{tikzpicture}[x=0.5cm,y=0.5cm]"]
    used = sorted({grid.color_index(grid.cells[p]) for p, _ in positions
                   if grid.cells[p].indices})
    for k in used:
        out.append(
            f"\\definecolor{{walt{k}}}{{HTML}}{{{palette_color(palette, k)[1:].upper()}}}"
        )
    reach = max(x1 - x0, y1 - y0) * 0.6 + 1.0
    for root in ((Q(1), Q(0)), (Q(0), Q(1))):
        dx, dy = embed(grid.alg, root)
        norm = math.hypot(dx, dy)
        ux, uy = dx / norm * reach, dy / norm * reach
        out.append(
            f"\\draw[gray!40] ({fmt6(-ux)},{fmt6(-uy)}) -- ({fmt6(ux)},{fmt6(uy)});"
        )
    for (point, (x, y)) in positions:
        s = grid.cells[point]
        if not s.indices:
            continue
        k = grid.color_index(s)
        shape = (
            f"circle (0.160000)"
            if palette_marker(palette, k) == "circle"
            else f"++(-0.140000,-0.140000) rectangle ++(0.280000,0.280000)"
        )
        out.append(f"\\fill[walt{k}] ({fmt6(x)},{fmt6(y)}) {shape};")
    # Legend nodes down the right edge.
    for k, s in enumerate(grid.key):
        ly = y1 - 0.8 * k
        label = s.describe().replace("{", "\\{").replace("}", "\\}")
        out.append(
            f"\\fill[walt{k}] ({fmt6(x1 + 1.5)},{fmt6(ly)}) circle (0.160000);"
        )
        out.append(
            f"\\node[anchor=west,font=\\tiny] at ({fmt6(x1 + 1.9)},{fmt6(ly)}) "
            f"{{{label}}};"
        )
    out.append("\\end{tikzpicture}")
    return ("\n".join(out) + "\n").encode("utf-8")
