"""
From a necklace braid to a J-braid presentation
================================================

The closure of the necklace braid b(n, m) on n + 2 strands is a torus link with
one circle around each core. Reading meridian relations off the closure, twisting
by a half twist and relabelling the two core strands gives the window-pair
presentation on x1..xn, y, z.
"""

from torusnecklace.necklaces import half_twist, necklace
from torusnecklace.presentations import (
    abelianization,
    from_braid,
    necklace_pairs,
    relator_match,
    rename,
    simplify,
    transform,
)
from torusnecklace.isomaps import necklace_pipeline_check

n, m = 3, 4
beta = necklace(n, m)
print("braid:", beta)

p0 = from_braid(beta)
print("closure relations:", len(p0.relations))
print("abelianization:", abelianization(p0))  # one free generator per link component

p1 = transform(p0, half_twist(n, n + 2))
p2 = rename(simplify(p1), {f"x{n + 1}": "y", f"x{n + 2}": "z"})
print(p2)
print("matches window pairs:", relator_match(p2, necklace_pairs(n, m, "chain")))

# the whole run, including the three quotient flavors, as a report
report = necklace_pipeline_check(4, 6)
for item in report.items:
    print(f"  {item.status:>4}  {item.name}")
