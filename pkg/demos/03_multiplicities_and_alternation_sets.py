"""Weight multiplicities via the alternating Weyl-group sum, and the
alternation sets that record which group elements actually contribute.

Run with: python3 demos/03_multiplicities_and_alternation_sets.py
"""

from fractions import Fraction as Q

from weylalt import (
    alt_set_closed,
    alt_set_oracle,
    multiplicity,
    multiplicity_restricted,
    to_root_basis,
    weyl_group,
)

print("Zero-weight multiplicities of small G2 highest-weight modules:")
for lam_f, label in (((1, 0), "7-dim"), ((0, 1), "adjoint, 14-dim")):
    lam = to_root_basis("G2", (Q(lam_f[0]), Q(lam_f[1])))
    m = multiplicity("G2", lam, (Q(0), Q(0)))
    print(f"  lambda = {lam_f} ({label}): m(0) = {m}")

print()
print("The alternation set A(lambda, mu) keeps only the contributing terms.")
lam = to_root_basis("A2", (Q(3), Q(0)))
mu = (Q(0), Q(0))
s_closed = alt_set_closed("A2", (Q(3), Q(0)), (Q(0), Q(0)))
s_oracle = alt_set_oracle("A2", lam, mu)
print(f"  A2, lambda = 3 w1, mu = 0:")
print(f"    closed form: {s_closed.describe()}")
print(f"    oracle:      {s_oracle.describe()}")
assert s_closed == s_oracle

full = multiplicity("A2", lam, mu)
restricted = multiplicity_restricted("A2", lam, mu, s_oracle)
print(f"    full sum over all {len(weyl_group('A2'))} elements: {full}")
print(f"    sum restricted to the {len(s_oracle)} members:      {restricted}")
