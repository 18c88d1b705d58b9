"""
Maps between J-braid groups and circular groups
===============================================

phi sends the full J-braid group for (n, m) to G(d+2, d+2) with d = gcd(n, m), and
psi goes back. Every identity below is decided by normal forms in a circular group.
The last section tests a proposed map from the torus link group to G(n, m).
"""

from math import gcd

from torusnecklace.isomaps import phi, round_trip, special_elements, torus_link_map_evidence, verify_relators

h = phi(2, 3)
for name, image in h.images.items():
    print(f"phi({name}) = {image}")

print("phi respects relations:", verify_relators(h).ok)
print("phi(psi(a_i)) = a_i:", round_trip(2, 3).ok)

sp, report = special_elements(2, 3)
print("Delta =", sp.Delta)
for item in report.items:
    print(f"  {item.status:>7}  {item.name}")

# x -> a1...am, y -> a1...an, m_i -> a_i
print()
print("cell   literal  reversed")
for n in range(1, 6):
    for m in range(1, 6):
        literal = torus_link_map_evidence(n, m)
        reversed_ = torus_link_map_evidence(n, m, "reversed")
        mark = "" if gcd(n, m) > 1 else "  coprime"
        print(f"({n},{m})  {str(literal.ok):>7}  {str(reversed_.ok):>8}{mark}")

# at (2, 3) the literal product x^s y^r lands on a2, a conjugate of a1
print(torus_link_map_evidence(2, 3).failures())
