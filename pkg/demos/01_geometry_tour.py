#!/usr/bin/env python3
"""Tour of the finite geometry: PG(3,2), the symplectic form, and the Doily.

Fifteen two-qubit Pauli observables (phases dropped) sit on the fifteen
points of PG(3,2); two observables commute exactly when the symplectic form
vanishes on their points.  The commuting pairs organise into 15 totally
isotropic lines: the Doily.
"""

from itertools import combinations

import xdoily as xd

print("== points and labels ==")
for p in xd.POINTS:
    print(f"  {xd.point_str(p)}  <->  {xd.point_to_pauli(p)}")

print("\n== the symplectic form decides commutation ==")
for a, b in (("ZZ", "XX"), ("ZZ", "XY"), ("IX", "XI"), ("IX", "ZI")):
    s = xd.symplectic_form(xd.pauli_to_point(a), xd.pauli_to_point(b))
    word = "commute" if s == 0 else "anticommute"
    print(f"  {a} and {b}: sigma = {s} -> they {word}")

print("\n== lines ==")
lines = xd.enumerate_lines()
iso = xd.isotropic_lines()
print(f"  PG(3,2) has {len(lines)} lines; {len(iso)} of them are totally isotropic")
print("  each isotropic line is a mutually commuting triple, e.g.:")
for line in iso[:3]:
    labels = [xd.point_to_pauli(p) for p in line]
    print(f"    {labels[0]} * {labels[1]} ~ {labels[2]}")

print("\n== the Doily is triangle-free, 3 points per line, 3 lines per point ==")
per_point = {xd.point_to_pauli(p): sum(p in line for line in iso) for p in xd.POINTS}
print(f"  lines through each point: {sorted(set(per_point.values()))}")
triangles = 0
for l1, l2, l3 in combinations(iso, 3):
    meets = [set(l1) & set(l2), set(l1) & set(l3), set(l2) & set(l3)]
    if all(len(m) == 1 for m in meets) and len(meets[0] | meets[1] | meets[2]) == 3:
        triangles += 1
print(f"  triangles found: {triangles}")

print("\n== Fano planes: everything commuting with a fixed observable ==")
for label in ("ZZ", "IX"):
    plane = xd.fano_plane(xd.pauli_to_point(label))
    print(f"  F_{label} = {[xd.point_to_pauli(q) for q in plane]}")
