"""Render Weyl alternation diagrams (SVG, CSV, TikZ) and classify the
shape of the empty region.

Run with: python3 demos/05_diagrams.py
Output lands in demos/output/.
"""

import pathlib
from fractions import Fraction as Q

from weylalt import classify_shape, diagram, emit_csv, emit_svg, emit_tikz

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

JOBS = [
    ("A2", (Q(0), Q(0)), 6, "a2_mu0"),
    ("B2", (Q(1), Q(2)), 10, "b2_mu_1_2"),
    ("G2", (Q(2), Q(1)), 10, "g2_mu_2_1"),
]

for alg, mu, window, stem in JOBS:
    grid = diagram(alg, mu, window)
    for emit, ext in ((emit_svg, "svg"), (emit_csv, "csv"), (emit_tikz, "tikz")):
        path = OUT / f"{stem}.{ext}"
        path.write_bytes(emit(grid))
        print(f"wrote {path}")
    mu_str = f"({mu[0]}, {mu[1]})"
    print(f"  {alg}, mu = {mu_str}: {len(grid.key)} distinct sets,"
          f" empty region shape: {classify_shape(alg, mu)}")
