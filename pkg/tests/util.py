"""Shared test helpers: an independent partition oracle and sweep drivers."""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Dict, List, Sequence, Tuple

from weylalt import (
    alt_set_closed,
    alt_set_oracle,
    positive_roots,
    to_root_basis,
)

# mu divisibility hypotheses (n divisor, m divisor) per algebra.
MU_DIVISORS = {"A2": (1, 1), "B2": (1, 2), "C2": (2, 1), "D2": (2, 2), "G2": (1, 1)}


def dp_partition(alg: str, a: int, b: int) -> int:
    """Coin-change dynamic program over the positive roots; deliberately a
    different algorithm from the library's depth-first enumeration."""
    if a < 0 or b < 0:
        return 0
    table = [[0] * (b + 1) for _ in range(a + 1)]
    table[0][0] = 1
    for root in positive_roots(alg):
        r1, r2 = int(root[0]), int(root[1])
        for x in range(a + 1):
            for y in range(b + 1):
                if x >= r1 and y >= r2:
                    table[x][y] += table[x - r1][y - r2]
    return table[a][b]


def paper_to_root(alg: str, lam_p, mu_p):
    """Convert paper-convention coordinates to root-basis weights."""
    lam_p = (Q(lam_p[0]), Q(lam_p[1]))
    mu_p = (Q(mu_p[0]), Q(mu_p[1]))
    lam_r = lam_p if alg == "G2" else to_root_basis(alg, lam_p)
    mu_r = mu_p if alg in ("A2", "G2") else to_root_basis(alg, mu_p)
    return lam_r, mu_r


def mu_sweep(alg: str, mu_max: int) -> List[Tuple[int, int]]:
    dn, dm = MU_DIVISORS[alg]
    return [
        (n, m)
        for n in range(mu_max + 1)
        for m in range(mu_max + 1)
        if n % dn == 0 and m % dm == 0
    ]


def closed_vs_oracle_mismatches(alg: str, half_width: int, mu_max: int) -> Tuple[int, int]:
    """(points, mismatches) over the standard lambda window x mu sweep."""
    points = 0
    mismatches = 0
    mus = mu_sweep(alg, mu_max)
    for c1 in range(-half_width, half_width + 1):
        for c2 in range(-half_width, half_width + 1):
            lam_p = (Q(c1), Q(c2))
            for (n, m) in mus:
                mu_p = (Q(n), Q(m))
                lam_r, mu_r = paper_to_root(alg, lam_p, mu_p)
                points += 1
                closed = alt_set_closed(alg, lam_p, mu_p)
                oracle = alt_set_oracle(alg, lam_r, mu_r)
                if closed.indices != oracle.indices:
                    mismatches += 1
    return points, mismatches
