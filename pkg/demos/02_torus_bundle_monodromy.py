#!/usr/bin/env python3
"""The boundary of a plumbed sphere cycle is a torus bundle over the circle.

Its monodromy is the product of elementary SL(2, Z) matrices read off the
self-intersection sequence.  The trace is invariant under rotating or
reversing the cycle and under toric moves, and it knows the determinant of
the intersection form: det Q = (-1)^k (tr A - 2).
"""

from logcy import (
    bundle_type,
    cycle,
    determinant,
    intersection_matrix,
    monodromy,
    nondegeneracy_by_trace,
)

for seq in [(-2, -2), (-3, -3), (3, -2, 0), (0, 0, 0, 0), (-2, -3, -2, -3)]:
    d = cycle(*seq)
    m = monodromy(d)
    cert = nondegeneracy_by_trace(d)
    det = determinant(intersection_matrix(d))
    print(f"S(D) = {seq}")
    print(f"  A = {m.matrix()}  trace {m.trace}  ({bundle_type(m).value})")
    print(f"  det Q = {det},  (-1)^k (tr - 2) = {(-1) ** len(seq) * (m.trace - 2)}")
    print(f"  trace certifies nondegenerate: {cert.certifies_nondegenerate}")
    print()

print("Rotating a cycle conjugates the monodromy, so the trace is unchanged:")
base = (3, -2, 0)
for r in range(3):
    rot = base[r:] + base[:r]
    print(f"  {rot} -> trace {monodromy(cycle(*rot)).trace}")
