"""Partition function: frozen values, closed form, and structural recurrences."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from weylalt import ALGEBRAS, make_cached_partition, partition, partition_a2_closed
from weylalt.kostant import partition_positive

from util import dp_partition

# Values frozen from an independent dynamic-programming oracle.
FROZEN = [
    ("A2", 1, 1, 2),
    ("A2", 2, 3, 3),
    ("A2", 5, 5, 6),
    ("B2", 1, 1, 2),
    ("B2", 1, 2, 3),
    ("B2", 2, 2, 4),
    ("B2", 3, 2, 4),
    ("B2", 4, 4, 9),
    ("C2", 1, 1, 2),
    ("C2", 2, 1, 3),
    ("C2", 2, 2, 4),
    ("C2", 4, 3, 8),
    ("D2", 0, 0, 1),
    ("D2", 3, 4, 1),
    ("G2", 1, 1, 2),
    ("G2", 2, 1, 3),
    ("G2", 3, 2, 7),
    ("G2", 4, 2, 9),
    ("G2", 5, 3, 16),
]


@pytest.mark.parametrize("alg,a,b,expected", FROZEN)
def test_frozen_values(alg, a, b, expected):
    assert partition(alg, (Q(a), Q(b))) == expected


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_against_independent_dp(alg):
    for a in range(-2, 13):
        for b in range(-2, 13):
            assert partition(alg, (Q(a), Q(b))) == dp_partition(alg, a, b)


def test_a2_closed_form():
    for n in range(41):
        for m in range(41):
            assert partition("A2", (Q(n), Q(m))) == min(n, m) + 1
            assert partition_a2_closed(n, m) == min(n, m) + 1


def test_zero_off_lattice_and_off_cone():
    for alg in ALGEBRAS:
        assert partition(alg, (Q(1, 2), Q(1))) == 0
        assert partition(alg, (Q(-1), Q(3))) == 0
        assert partition(alg, (Q(0), Q(0))) == 1


@pytest.mark.parametrize("alg", ALGEBRAS)
@given(a=st.integers(-6, 25), b=st.integers(-6, 25))
@settings(max_examples=60)
def test_positivity_matches_count(alg, a, b):
    assert partition_positive(alg, (Q(a), Q(b))) == (partition(alg, (Q(a), Q(b))) > 0)


@pytest.mark.parametrize("alg", ("A2", "B2", "C2", "G2"))
def test_removal_recurrence(alg):
    # Splitting on whether an expression uses the highest root beta:
    # p(xi) = (count of expressions avoiding beta) + p(xi - beta).
    from weylalt import positive_roots

    beta = positive_roots(alg)[-1]

    def count_without_beta(a, b):
        roots = [r for r in positive_roots(alg) if r != beta]
        table = [[0] * (b + 1) for _ in range(a + 1)]
        table[0][0] = 1
        for r in roots:
            r1, r2 = int(r[0]), int(r[1])
            for x in range(a + 1):
                for y in range(b + 1):
                    if x >= r1 and y >= r2:
                        table[x][y] += table[x - r1][y - r2]
        return table[a][b]

    for a in range(13):
        for b in range(13):
            lhs = partition(alg, (Q(a), Q(b)))
            rhs = count_without_beta(a, b) + partition(
                alg, (Q(a) - beta[0], Q(b) - beta[1])
            )
            assert lhs == rhs, (alg, a, b)


def test_cached_partition_agrees():
    for alg in ALGEBRAS:
        cached = make_cached_partition(alg)
        for a in range(-3, 10):
            for b in range(-3, 10):
                assert cached((Q(a), Q(b))) == partition(alg, (Q(a), Q(b)))
                # second call hits the cache
                assert cached((Q(a), Q(b))) == partition(alg, (Q(a), Q(b)))
