#!/usr/bin/env python3
"""Blow-up rewriting: toric moves, reduction, and equivalence search.

A toric blow-up inserts a -1 sphere at a node; a zero-sphere lets a pair
of moves shift self-intersection from one neighbour to the other.  The
classic balanced triple below is pairwise toric equivalent, and the search
finds the two-move path through the length-4 cycle.
"""

from logcy import (
    canonical_form,
    cycle,
    monodromy,
    moves_to_obj,
    toric_blow_up,
    toric_equivalent,
    toric_minimal_reduce,
)

triple = [cycle(3, -2, 0), cycle(2, -2, -1, -1), cycle(2, -1, 0)]
print("balanced triple traces:", [monodromy(d).trace for d in triple])

word = toric_equivalent(triple[0], triple[2], max_length=5, min_entry=-4, max_steps=3)
print(f"(3,-2,0) -> (2,-1,0) in {len(word)} moves: {moves_to_obj(word.moves)}")
state = word.initial
for move in word.moves:
    from logcy import apply_move
    state = apply_move(state, move)
    print("   ", state.seq)

print()
print("blow-up chain from (3,-2,0):")
d = cycle(3, -2, 0)
for edge in (2, 0):
    d = toric_blow_up(d, edge)
    print(f"  toric blow-up at edge {edge}: {d.seq}")

result, word = toric_minimal_reduce(d)
print(f"reduction of {d.seq}: {result.seq} via {moves_to_obj(word.moves)}")

print()
print("bounded search honestly reports failure for inequivalent cycles:")
out = toric_equivalent(cycle(-3, -3), cycle(-3, -4), max_length=7, min_entry=-9, max_steps=8)
print("  (-3,-3) vs (-3,-4):", "path found" if out else "not found within bounds",
      f"(traces {monodromy(cycle(-3, -3)).trace} vs {monodromy(cycle(-3, -4)).trace})")
print("  canonical forms:", canonical_form(cycle(-3, -3)).seq, canonical_form(cycle(-3, -4)).seq)
