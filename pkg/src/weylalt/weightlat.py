"""Weight lattice coordinates and basis conversions.

Two coordinate systems are used throughout:

* root basis -- coefficients of (alpha1, alpha2); the internal canonical form;
* fundamental basis -- coefficients (c1, c2) of (omega1, omega2).
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Tuple

from .rootsys import Weight, check_algebra, fundamental_weights

FundCoords = Tuple[Q, Q]


def to_root_basis(alg: str, c: FundCoords) -> Weight:
    """Root-basis coordinates of c1*omega1 + c2*omega2."""
    w1, w2 = fundamental_weights(alg)
    c1, c2 = Q(c[0]), Q(c[1])
    return (c1 * w1[0] + c2 * w2[0], c1 * w1[1] + c2 * w2[1])


def to_fund_basis(alg: str, v: Weight) -> FundCoords:
    """Inverse of to_root_basis (the fundamental-weight matrix is unimodular
    up to the index of connection, so this is exact)."""
    w1, w2 = fundamental_weights(alg)
    det = w1[0] * w2[1] - w2[0] * w1[1]
    a, b = Q(v[0]), Q(v[1])
    return ((a * w2[1] - b * w2[0]) / det, (b * w1[0] - a * w1[1]) / det)


def add(u: Weight, v: Weight) -> Weight:
    return (u[0] + v[0], u[1] + v[1])


def sub(u: Weight, v: Weight) -> Weight:
    return (u[0] - v[0], u[1] - v[1])


def neg(u: Weight) -> Weight:
    return (-u[0], -u[1])


def in_root_lattice(alg: str, v: Weight) -> bool:
    """True iff v is an integer combination of the simple roots."""
    check_algebra(alg)
    return Q(v[0]).denominator == 1 and Q(v[1]).denominator == 1


def sl3_param(c: FundCoords) -> Tuple[int, int]:
    """For A2 weights c1*omega1 + c2*omega2 with 3 | (c1 - c2), return the
    pair (x, y) with c1 = 3x + y and c2 = y.

    Raises ValueError when c1, c2 are not integers with c1 = c2 (mod 3).
    """
    c1, c2 = Q(c[0]), Q(c[1])
    if c1.denominator != 1 or c2.denominator != 1:
        raise ValueError(f"fundamental coordinates must be integers, got {c}")
    if (c1 - c2) % 3 != 0:
        raise ValueError(f"need c1 = c2 (mod 3), got c1={c1}, c2={c2}")
    y = int(c2)
    x = int((c1 - c2) / 3)
    return (x, y)
