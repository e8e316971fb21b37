"""Kostant's partition function for the rank-2 root systems.

partition(alg, xi) counts the ways to write xi as a nonnegative integer
combination of the positive roots.  The count is obtained by direct
enumeration over the multiplicities of the non-simple positive roots; the
simple-root coefficients of the residue are then forced.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Callable, Tuple

from .rootsys import Weight, check_algebra, positive_roots


def _as_int_pair(xi: Weight) -> Tuple[int, int] | None:
    a, b = Q(xi[0]), Q(xi[1])
    if a.denominator != 1 or b.denominator != 1:
        return None
    return (int(a), int(b))


def _count(extras: Tuple[Tuple[int, int], ...], a: int, b: int) -> int:
    # Number of ways to pick nonnegative multiplicities for the remaining
    # non-simple roots so that the residue stays componentwise nonnegative.
    if a < 0 or b < 0:
        return 0
    if not extras:
        return 1
    (r1, r2), rest = extras[0], extras[1:]
    if not rest:
        return min(a // r1, b // r2) + 1
    total = 0
    k = 0
    while k * r1 <= a and k * r2 <= b:
        total += _count(rest, a - k * r1, b - k * r2)
        k += 1
    return total


def _extras(alg: str) -> Tuple[Tuple[int, int], ...]:
    roots = positive_roots(alg)[2:]
    # Largest roots first keeps the enumeration tree shallow.
    return tuple(
        sorted(((int(r[0]), int(r[1])) for r in roots), key=sum, reverse=True)
    )


def partition(alg: str, xi: Weight) -> int:
    """Value of the partition function at xi (0 off the positive cone)."""
    check_algebra(alg)
    pair = _as_int_pair(xi)
    if pair is None:
        return 0
    return _count(_extras(alg), *pair)


def partition_positive(alg: str, xi: Weight) -> bool:
    """True iff at least one expression of xi over the positive roots exists.

    Found by the same enumeration as partition(), stopping at the first hit
    (the all-simple-roots expression, whenever the coordinates admit one).
    """
    check_algebra(alg)
    pair = _as_int_pair(xi)
    if pair is None:
        return False
    a, b = pair
    return a >= 0 and b >= 0  # zero multiplicities on every non-simple root


def partition_a2_closed(n: int, m: int) -> int:
    """Closed form for A2: min(n, m) + 1 on the positive cone, else 0."""
    if n < 0 or m < 0:
        return 0
    return min(n, m) + 1


def make_cached_partition(alg: str) -> Callable[[Weight], int]:
    """A memoised single-algebra partition function for sweep-heavy callers.

    The plain partition() stays side-effect free; callers opt in per sweep.
    """
    check_algebra(alg)
    cache: dict[Weight, int] = {}

    def cached(xi: Weight) -> int:
        key = (Q(xi[0]), Q(xi[1]))
        if key not in cache:
            cache[key] = partition(alg, key)
        return cache[key]

    return cached
