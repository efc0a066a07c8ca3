"""Total orders of the integers with finitely many inversions.

These behave like permutations of a window that leave everything outside
in place, except that nothing pins the window: arcs and walls slide
freely along the number line.
"""

from __future__ import annotations

from weakorder.sn import format_arc
from weakorder.total_orders import (
    find_cover_below,
    finite_total_order,
    format_tot,
    ji_from_arc_tot,
    join_tot,
    lower_arcs_tot,
    lower_walls_tot,
    order_word,
    standard_order,
)

# The order that swaps 0 and 1, and the one that swaps 1 and 2.
s01 = finite_total_order([(0, 1)])
s12 = finite_total_order([(1, 2)])
j = join_tot([s01, s12])
print("join inversions", sorted(j.invs))
print("word on [0,2]  ", format_tot(j))

# The same picture shifted three to the left: nothing changes but labels.
shifted = finite_total_order([(a - 3, b - 3) for a, b in j.invs])
print("shifted walls  ", sorted(lower_walls_tot(shifted)))
print("shifted word   ", format_tot(shifted))

# An arc's irreducible lives wherever the arc does.
x = sorted(lower_arcs_tot(shifted), key=lambda t: (t.a, t.b))[0]
ji = ji_from_arc_tot(x)
print("arc", format_arc(x), "-> irreducible word",
      order_word(ji, x.a, x.b))

# Walking covers downward empties the inversion set in finitely many steps.
t = j
while t != standard_order():
    wall = sorted(lower_walls_tot(t))[0]
    t = find_cover_below(standard_order(), t, wall)
    print("descend through", wall, "->", format_tot(t))
