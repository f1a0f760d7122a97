#!/usr/bin/env python3
"""Intersection forms, signatures and the contact trichotomy.

Every divisor carries a symmetric intersection form.  Its exact signature
(b+, b0, b-) decides how a neighbourhood of the divisor can look:
negative definite forms give convex boundaries, b+ = 1 gives concave
boundaries, and degenerate forms with b+ = 0 admit no contact boundary.
"""

from logcy import classify, cycle, descriptors, intersection_matrix, torus

examples = [
    cycle(-3, -3),      # a cusp-resolution cycle
    cycle(-2, -2, -2),  # the parabolic wall
    cycle(0, 0, 0, 0),  # the square of zero-spheres
    cycle(1, 4),        # a line and a conic
    torus(-5),
    torus(0),
    torus(8),
]

print(f"{'sequence':>18} {'Q_D':^6} {'(b+, b0, b-)':^14} {'s(D)':>5}  contact")
for d in examples:
    q = intersection_matrix(d)
    c = classify(d)
    desc = descriptors(d)
    label = str(d.seq) if hasattr(d, "seq") else f"torus({d.s})"
    print(f"{label:>18} {len(q)}x{len(q)}  {str(tuple(c.inertia)):^14} {desc.s_total:>5}  {c.contact.value}")

print()
print("The form of (0,0,0,0) in full:")
for row in intersection_matrix(cycle(0, 0, 0, 0)):
    print("   ", row)
print("rank 2, one positive and one negative eigenvalue: a concave divisor.")
