"""The Kostant partition function: counting expressions of a weight as a
sum of positive roots.

Run with: python3 demos/02_partition_function.py
"""

from fractions import Fraction as Q

from weylalt import partition, partition_a2_closed

print("A2: p(n a1 + m a2) = min(n, m) + 1")
for n in range(5):
    row = [partition("A2", (Q(n), Q(m))) for m in range(5)]
    closed = [partition_a2_closed(n, m) for m in range(5)]
    assert row == closed
    print(f"  n={n}: {row}")

print()
print("G2 grows much faster (six positive roots):")
for n in range(5):
    print(f"  n={n}:", [partition("G2", (Q(n), Q(m))) for m in range(5)])

print()
print("Off the cone the count is zero:")
print("  p_B2(-1, 2) =", partition("B2", (Q(-1), Q(2))))
print("  p_B2(1/2, 1) =", partition("B2", (Q(1, 2), Q(1))))
