"""Weyl alternation diagrams over lattice windows, empty regions, and the
shape classification of the empty region as a function of mu.

Window coordinates follow each algebra's natural convention for lambda:
fundamental coordinates (c1, c2) for A2/B2/C2/D2 and root coordinates for
G2.  mu is fixed per grid, in the same convention as the condition tables
(root coordinates for A2 and G2, fundamental otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, FrozenSet, Tuple

from .conditions import alt_set_closed
from .multiplicity import AltSet
from .rootsys import check_algebra
from .weightlat import FundCoords

Window = Tuple[int, int, int, int]  # c1_min, c1_max, c2_min, c2_max

SHAPE_LABELS = (
    "square-vertex-up",
    "square-edge-top",
    "eight-star",
    "hexagon-vertex-up",
    "hexagon-edge-top",
    "twelve-star",
    "vertical-strip",
    "horizontal-strip",
    "cross",
    "triangle-up",
    "triangle-down",
    "six-star",
    "point-cluster",
    "unclassified",
)


def shape_sort_key(label: str) -> int:
    return SHAPE_LABELS.index(label)


@dataclass(frozen=True)
class DiagramGrid:
    alg: str
    mu: FundCoords
    window: Window
    cells: Dict[Tuple[int, int], AltSet]
    key: Tuple[AltSet, ...]  # distinct nonempty sets, first-occurrence order

    def points(self) -> Tuple[Tuple[int, int], ...]:
        c1_min, c1_max, c2_min, c2_max = self.window
        return tuple(
            (c1, c2)
            for c1 in range(c1_min, c1_max + 1)
            for c2 in range(c2_min, c2_max + 1)
        )

    def color_index(self, s: AltSet) -> int:
        return self.key.index(s)


def normalize_window(window: int | Window) -> Window:
    if isinstance(window, int):
        if window < 0:
            raise ValueError(f"window half-width must be nonnegative, got {window}")
        return (-window, window, -window, window)
    c1_min, c1_max, c2_min, c2_max = window
    if c1_min > c1_max or c2_min > c2_max:
        raise ValueError(f"empty window {window}")
    return (c1_min, c1_max, c2_min, c2_max)


def diagram(alg: str, mu: FundCoords, window: int | Window = 12) -> DiagramGrid:
    """Evaluate alt_set_closed at every integer lambda point of the window.

    Points failing the root-lattice gate simply come out empty.
    """
    check_algebra(alg)
    win = normalize_window(window)
    c1_min, c1_max, c2_min, c2_max = win
    cells: Dict[Tuple[int, int], AltSet] = {}
    key: list[AltSet] = []
    for c1 in range(c1_min, c1_max + 1):
        for c2 in range(c2_min, c2_max + 1):
            s = alt_set_closed(alg, (Q(c1), Q(c2)), mu)
            cells[(c1, c2)] = s
            if s.indices and s not in key:
                key.append(s)
    return DiagramGrid(alg, (Q(mu[0]), Q(mu[1])), win, cells, tuple(key))


def empty_region(grid: DiagramGrid) -> FrozenSet[Tuple[int, int]]:
    """Window points whose alternation set is empty (non-root-lattice points
    included; off the sublattice everything vanishes)."""
    return frozenset(p for p, s in grid.cells.items() if not s.indices)


def _nonneg_ints(mu: FundCoords) -> Tuple[int, int]:
    n, m = Q(mu[0]), Q(mu[1])
    if n.denominator != 1 or m.denominator != 1 or n < 0 or m < 0:
        raise ValueError(f"mu must have nonnegative integer coordinates, got {mu}")
    return (int(n), int(m))


def classify_shape(alg: str, mu: FundCoords) -> str:
    """Shape of the (unbounded-intent) empty region for dominant mu, by the
    explicit mu-conditions of the case analyses; geometric pattern matching
    is deliberately avoided."""
    check_algebra(alg)
    if alg == "A2":
        k, l = Q(mu[0]), Q(mu[1])
        if k.denominator != 1 or l.denominator != 1:
            return "six-star"  # mu outside the root lattice
        k, l = int(k), int(l)
        if k < 0 or l < 0:
            raise ValueError(f"mu must be dominant (root coords >= 0), got {mu}")
        if k == 0 and l == 0:
            return "point-cluster"
        if k == l:
            return "six-star"
        return "triangle-up" if k > l else "triangle-down"
    if alg == "G2":
        n, m = _nonneg_ints(mu)
        left = 2 * n + 1 > 3 * m  # alpha1-side dominance of the region
        right = 2 * m + 1 > n
        if left and right:
            return "twelve-star"
        if left:
            return "hexagon-vertex-up"
        if right:
            return "hexagon-edge-top"
        return "unclassified"
    n, m = _nonneg_ints(mu)
    if alg == "B2":
        if m % 2:
            raise ValueError(f"B2 requires 2|m, got mu={mu}")
        if m == 0:
            return "square-vertex-up"
        if n == 0:
            return "square-edge-top"
        return "eight-star"
    if alg == "C2":
        if n % 2:
            raise ValueError(f"C2 requires 2|n, got mu={mu}")
        if n == 0:
            return "square-vertex-up"
        if m == 0:
            return "square-edge-top"
        return "eight-star"
    # D2
    if n % 2 or m % 2:
        raise ValueError(f"D2 requires 2|n and 2|m, got mu={mu}")
    if m == 0:
        return "vertical-strip"
    if n == 0:
        return "horizontal-strip"
    return "cross"
