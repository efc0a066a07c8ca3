"""Finite lattices carved out of the infinite orders.

Restricting attention to a window [a,b] of integers identifies any two
orders that agree there.  The classes form a finite lattice, small enough
to check properties exhaustively, and separating windows tell any two
distinct orders apart.
"""

from __future__ import annotations

import numpy as np

from weakorder.lattices import (
    canonical_join_rep_fin,
    check_lattice,
    congruence_generated_by,
    is_join_semidistributive_fin,
    is_meet_semidistributive_fin,
    join_irreducibles_fin,
    quotient_lattice,
    tito_quotient,
    tito_window_word,
    tot_quotient,
    weak_order_poset,
)
from weakorder.tito import format_windows, parse_windows

# The weak order on permutations of 1..3, as a concrete poset.
wo3 = weak_order_poset(3)
rep = check_lattice(wo3)
print("weak order n=3:", len(wo3), "elements, lattice:", rep.is_lattice)
print("join irreducibles:", " ".join(sorted(join_irreducibles_fin(wo3))))
print("canonical joinands of 321:",
      " ".join(sorted(canonical_join_rep_fin(wo3, "321"))))

# Collapsing one cover propagates hard: forcing 123 ~ 213 drags each
# remaining element into one of two classes, so the hexagon folds flat.
part = congruence_generated_by(wo3, [("123", "213")])
q = quotient_lattice(wo3, part)
print("contract 123~213:", len(q), "classes, quotient elements:",
      " ".join(q.elements))

# Orders of the integers restricted to the window [1,4] reproduce the
# weak order on 4 letters, label for label.
tq = tot_quotient(1, 4)
wo4 = weak_order_poset(4)
same = [x.replace(",", "") for x in tq.elements] == list(wo4.elements) and \
    np.array_equal(tq.leq, wo4.leq)
print("window [1,4] quotient == weak order n=4:", same)

# Periodic orders restricted to the same window give something new,
# still a lattice and still semidistributive on both sides.
pq = tito_quotient(2, 1, 4)
print("period-2 classes on [1,4]:", len(pq.poset),
      " lattice:", check_lattice(pq.poset).is_lattice,
      " join-SD:", is_join_semidistributive_fin(pq.poset),
      " meet-SD:", is_meet_semidistributive_fin(pq.poset))

# Each class carries the least order inducing its window word.
word = tito_window_word(parse_windows("[~2,1]", 2), 1, 4)
label = ",".join(str(v) for v in word)
print("class of [~2,1] is", label,
      " least representative:", format_windows(pq.reps[label]))

# Distinct orders always land in distinct classes once the window is
# wide enough: the finite quotients jointly separate points.
t1 = parse_windows("[2,1]", 2)
t2 = parse_windows("[~2,1]", 2)
for b in range(2, 7):
    w1 = tito_window_word(t1, 1, b)
    w2 = tito_window_word(t2, 1, b)
    print(f"window [1,{b}]: {w1} vs {w2}", "split" if w1 != w2 else "merged")
    if w1 != w2:
        break
