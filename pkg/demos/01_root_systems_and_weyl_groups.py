"""Tour of the five rank-2 root systems and their Weyl groups.

Run with: python3 demos/01_root_systems_and_weyl_groups.py
"""

from weylalt import positive_roots, rho, simple_roots, weyl_group

for alg in ("A2", "B2", "C2", "D2", "G2"):
    group = weyl_group(alg)
    print(f"== {alg} ==")
    print(f"  simple roots (root basis): {simple_roots(alg)}")
    print(f"  positive roots: {len(positive_roots(alg))}")
    r = rho(alg)
    print(f"  rho = {r[0]} a1 + {r[1]} a2")
    print(f"  Weyl group order {len(group)}:")
    for el in group:
        print(f"    {el.name():<14} length {el.length}  sign {el.sign:+d}")
    print()
