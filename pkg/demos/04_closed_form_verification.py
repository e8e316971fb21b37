"""Sweep a lambda window and confirm the closed-form inequality
description of every alternation set against the brute-force oracle,
then look up the matching case of the printed case analysis.

Run with: python3 demos/04_closed_form_verification.py
"""

from fractions import Fraction as Q

from weylalt import alt_set_closed, alt_set_oracle, theorem_case, to_root_basis

ALG = "B2"
WINDOW = 8
MU = (Q(1), Q(2))  # fundamental coordinates; 2 | m as the lattice requires

points = mismatches = 0
seen = {}
for c1 in range(-WINDOW, WINDOW + 1):
    for c2 in range(-WINDOW, WINDOW + 1):
        lam_f = (Q(c1), Q(c2))
        closed = alt_set_closed(ALG, lam_f, MU)
        oracle = alt_set_oracle(
            ALG, to_root_basis(ALG, lam_f), to_root_basis(ALG, MU)
        )
        points += 1
        if closed != oracle:
            mismatches += 1
        if len(closed):
            case = theorem_case(ALG, lam_f, MU)
            seen.setdefault(case.label, closed.describe())

print(f"{ALG}, mu = {MU}: {mismatches} mismatches / {points} points")
print(f"{len(seen)} distinct theorem cases met on this window:")
for label in sorted(seen):
    print(f"  case {label}: {seen[label]}")
