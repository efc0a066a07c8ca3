"""Translation-invariant total orders of the integers, period n.

An order here is a sequence of blocks of residue classes, each block
waxing (translates ascend) or waning (translates descend).  Joins and
meets exist for every pair, but unlike the finite story there are
elements with no lower walls at all, so not everything is a join of
irreducibles.
"""

from __future__ import annotations

from weakorder.tito import (
    canonical_join_rep_tito,
    flip_tito,
    format_windows,
    format_wrapped_arc,
    inversion_indices_upto,
    is_widely_generated_tito,
    join_of_cyclic_collection,
    join_tito,
    leq_tito,
    lower_walls_tito,
    lower_wrapped_arcs,
    meet_tito,
    ji_from_wrapped_arc,
    parse_windows,
    parse_wrapped_arc,
    standard_tito,
)

n = 2

# Window notation: each [...] is one block shown through a window of n
# consecutive values, ~ marking the waning ones.
x = parse_windows("[2,1]", n)
y = parse_windows("[~1,2]", n)
print("x =", format_windows(x), " y =", format_windows(y))
print("inversions of y up to span 4:",
      sorted((ri.a, ri.b) for ri in inversion_indices_upto(y, 4)))

j = join_tito([x, y])
m = meet_tito([x, y])
print("x v y =", format_windows(j))
print("x ^ y =", format_windows(m))
print("x <= join:", leq_tito(x, j), " meet <= y:", leq_tito(m, y))

# The join wanes, so it sits above infinitely many elements; its walls
# are still finite in number and each flip steps down one cover.
print("walls of the join:",
      sorted((w.a, w.b) for w in lower_walls_tito(j)))
for w in sorted(lower_walls_tito(j), key=lambda r: (r.b - r.a, r.a)):
    print("flip", (w.a, w.b), "->", format_windows(flip_tito(j, w)))

# [1][2] splits the standard order into two one-class blocks.  It is
# strictly above standard yet has no walls: every downward step from it
# starts an infinite descent, and no set of arcs can rebuild it.
split = parse_windows("[1][2]", n)
print("split =", format_windows(split),
      " above standard:", leq_tito(standard_tito(n), split) and split != standard_tito(n))
print("walls:", sorted(lower_walls_tito(split)),
      " widely generated:", is_widely_generated_tito(split))

# The join, by contrast, is determined by its arcs.
arcs = canonical_join_rep_tito(j)
print("canonical joinands of x v y:",
      sorted(format_wrapped_arc(w) for w in arcs))
rebuilt = join_of_cyclic_collection(arcs, n)
print("arcs rebuild the join:", rebuilt == j)

# Arcs may wrap past a full period; such an arc still cuts out a single
# irreducible with that arc as its only wall.
wrap = parse_wrapped_arc("<1,4|2|3>", n)
wide = ji_from_wrapped_arc(wrap, n)
print("irreducible of", format_wrapped_arc(wrap), "is", format_windows(wide))
print("its arcs:", sorted(format_wrapped_arc(w) for w in lower_wrapped_arcs(wide)))
