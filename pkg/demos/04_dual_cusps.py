#!/usr/bin/env python3
"""Dual cycles of negative definite toric minimal divisors.

Writing such a cycle in blocks (a_1, -2 x b_1, a_2, ...) with a_i <= -3,
the dual swaps the roles of the a-entries and the -2 chains:
a*_i = -b_i - 3 and b*_i = -a_{i+1} - 3.  The two plumbed boundaries are
orientation-reversing diffeomorphic, which shows up combinatorially as an
involution with equal monodromy traces.
"""

from logcy import block_form, cycle, dual_cycle, elliptic_dual, monodromy, torus
from logcy import NotEligible

pairs = [cycle(-4, -2), cycle(-3, -3), cycle(-3, -4), cycle(-5, -2, -2, -3)]
for d in pairs:
    bf = block_form(d)
    dual = dual_cycle(d)
    print(f"{d.seq}: blocks {bf.pairs}")
    print(f"  dual {dual.seq}, dual of dual {dual_cycle(dual).seq}")
    print(f"  traces {monodromy(d).trace} = {monodromy(dual).trace}")
    print()

print("ineligible cycles name the failed requirement:")
for d in [cycle(-2, -2, -2), cycle(-1, -3, -2), cycle(-3, -2)]:
    try:
        block_form(d)
    except NotEligible as exc:
        print(f"  {d.seq}: {exc.failed}")

print()
print("elliptic duality negates the torus self-intersection:")
print("  torus(3) <->", elliptic_dual(torus(3)))
