"""Diagram grids, empty regions, and shape classification."""

from fractions import Fraction as Q

import pytest

from weylalt import (
    ALGEBRAS,
    alt_set_oracle,
    classify_shape,
    condition_table,
    diagram,
    empty_region,
)
from weylalt.geometry import SHAPE_LABELS, normalize_window, shape_sort_key
from util import paper_to_root


def test_a2_grid_example():
    grid = diagram("A2", (Q(0), Q(0)), 4)
    assert grid.cells[(3, 0)].describe() == "{1, s2}"
    assert grid.cells[(0, 0)].describe() == "{1}"


def test_d2_grid_has_four_distinct_sets():
    grid = diagram("D2", (Q(0), Q(0)), 4)
    assert len(grid.key) == 4
    assert all(len(s) == 1 for s in grid.key)


def test_single_origin_window():
    for alg in ALGEBRAS:
        grid = diagram(alg, (Q(0), Q(0)), (0, 0, 0, 0))
        assert grid.cells[(0, 0)].describe() == "{1}"
        assert len(grid.key) == 1
        assert empty_region(grid) == frozenset()


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_grid_agrees_with_oracle(alg):
    mu_p = {"A2": (1, 0), "B2": (1, 2), "C2": (2, 1), "D2": (2, 2), "G2": (2, 1)}[alg]
    grid = diagram(alg, (Q(mu_p[0]), Q(mu_p[1])), 7)
    for (c1, c2), s in grid.cells.items():
        lam_r, mu_r = paper_to_root(alg, (Q(c1), Q(c2)), mu_p)
        assert s.indices == alt_set_oracle(alg, lam_r, mu_r).indices


def test_key_stability():
    g1 = diagram("B2", (Q(1), Q(2)), 8)
    g2 = diagram("B2", (Q(1), Q(2)), 8)
    assert g1.key == g2.key
    assert [g1.color_index(s) for s in g1.key] == list(range(len(g1.key)))


def test_d2_empty_region_is_cross_between_quadrants():
    grid = diagram("D2", (Q(0), Q(0)), 6)
    region = empty_region(grid)
    # the four quadrant-like regions miss exactly the odd lines c1 = -1, c2 = -1
    expected = {
        (c1, c2)
        for c1 in range(-6, 7)
        for c2 in range(-6, 7)
        if c1 % 2 or c2 % 2 or c1 == -1 or c2 == -1
    }
    # odd points are all empty (lattice gate), and on the even sublattice
    # only nothing is empty for mu = 0
    assert region == frozenset(expected)


def test_a2_empty_region_clusters_near_minus_rho():
    grid = diagram("A2", (Q(0), Q(0)), 6)
    region = [
        p for p in empty_region(grid) if (p[0] - p[1]) % 3 == 0
    ]  # points satisfying the lattice gate
    assert region  # nonempty cluster
    for (c1, c2) in region:
        # -rho has fundamental coordinates (-1, -1)
        assert abs(c1 + 1) + abs(c2 + 1) <= 4


def test_boundary_lines_are_affine():
    # condition value is affine in (c1, c2): second differences vanish and
    # the gradient matches the coefficients
    for alg in ("B2", "C2", "D2", "G2", "A2"):
        for cond in condition_table(alg):
            if alg == "A2":
                # parameters (x, y): lambda coordinates enter via x, y
                base = cond.value((Q(0), Q(0), Q(0), Q(0)))
                dx = cond.value((Q(1), Q(0), Q(0), Q(0))) - base
                dy = cond.value((Q(0), Q(1), Q(0), Q(0))) - base
                assert (dx, dy) == (cond.coeffs[0], cond.coeffs[1])
                continue
            base = cond.value((Q(0), Q(0), Q(0), Q(0)))
            d1 = cond.value((Q(1), Q(0), Q(0), Q(0))) - base
            d2 = cond.value((Q(0), Q(1), Q(0), Q(0))) - base
            assert (d1, d2) == (cond.coeffs[0], cond.coeffs[1])
            mixed = cond.value((Q(1), Q(1), Q(0), Q(0)))
            assert mixed == base + d1 + d2  # no curvature


SHAPE_CASES = [
    ("B2", (2, 0), "square-vertex-up"),
    ("B2", (0, 2), "square-edge-top"),
    ("B2", (1, 2), "eight-star"),
    ("C2", (2, 0), "square-edge-top"),
    ("C2", (0, 1), "square-vertex-up"),
    ("C2", (2, 1), "eight-star"),
    ("D2", (2, 0), "vertical-strip"),
    ("D2", (0, 2), "horizontal-strip"),
    ("D2", (2, 2), "cross"),
    ("G2", (2, 1), "twelve-star"),
    ("G2", (4, 1), "hexagon-vertex-up"),
    ("G2", (1, 4), "hexagon-edge-top"),
    ("G2", (0, 0), "twelve-star"),
    ("A2", (1, 1), "six-star"),
    ("A2", (2, 1), "triangle-up"),
    ("A2", (1, 2), "triangle-down"),
    ("A2", (0, 0), "point-cluster"),
    ("A2", (Q(4, 3), Q(5, 3)), "six-star"),
]


@pytest.mark.parametrize("alg,mu,expected", SHAPE_CASES)
def test_classify_shape(alg, mu, expected):
    assert classify_shape(alg, (Q(mu[0]), Q(mu[1]))) == expected


def test_classify_shape_rejects_out_of_hypothesis():
    with pytest.raises(ValueError):
        classify_shape("B2", (Q(1), Q(1)))  # 2 does not divide m
    with pytest.raises(ValueError):
        classify_shape("D2", (Q(1), Q(2)))
    with pytest.raises(ValueError):
        classify_shape("G2", (Q(-1), Q(0)))


def test_g2_unclassified_region():
    # 2n+1 <= 3m and 2m+1 <= n has no solutions with small mu but the label
    # exists for the uncovered combinations
    assert classify_shape("G2", (7, 5)) in SHAPE_LABELS


def test_shape_labels_total_order():
    keys = [shape_sort_key(l) for l in SHAPE_LABELS]
    assert keys == sorted(keys)
    with pytest.raises(ValueError):
        shape_sort_key("not-a-shape")


def test_eight_star_empty_region_symmetry_and_growth():
    mu = (Q(1), Q(2))  # omega1 + 2 omega2
    grid = diagram("B2", mu, 12)
    region = sorted(empty_region(grid))
    # restrict to gate-passing points (2 | c2 - m)
    core = [(c1, c2) for (c1, c2) in region if (c2 - 2) % 2 == 0]
    assert core
    # point symmetry about the centroid
    sx = Q(sum(p[0] for p in core), len(core))
    sy = Q(sum(p[1] for p in core), len(core))
    core_set = set(core)
    for (c1, c2) in core:
        mirrored = (2 * sx - c1, 2 * sy - c2)
        assert (int(mirrored[0]), int(mirrored[1])) in core_set
    # strictly larger than the mu = 0 empty region
    zero_core = [
        (c1, c2)
        for (c1, c2) in empty_region(diagram("B2", (Q(0), Q(0)), 12))
        if c2 % 2 == 0
    ]
    assert len(core) > len(zero_core)


def test_normalize_window_errors():
    with pytest.raises(ValueError):
        normalize_window((3, -3, 0, 0))
    with pytest.raises(ValueError):
        normalize_window(-1)
