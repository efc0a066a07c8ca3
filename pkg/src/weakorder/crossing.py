"""Crossing test shared by all arc flavors.

An arc from a up to b carries its interior points split into a left set
(points the curve passes above) and a right set (points it passes below).
Two arcs cross when they share an initial point, share a terminal point, or
their curves are forced to intersect: each curve passes on both sides of the
other at some point.  The combinatorial version of that statement only looks
at endpoint and side-set memberships, so it works unchanged for arcs on
[1..n], arcs on the integers, and translates of periodic arcs.
"""

from __future__ import annotations

from collections.abc import Set


def tuples_cross(
    a: int,
    b: int,
    left: Set[int],
    right: Set[int],
    a2: int,
    b2: int,
    left2: Set[int],
    right2: Set[int],
) -> bool:
    """Return True if the two arcs (a,b,left,right) and (a2,b2,left2,right2) cross."""
    if a == a2 or b == b2:
        return True
    ends = {a, b}
    ends2 = {a2, b2}
    # First arc passes weakly right of the second somewhere, and weakly left
    # somewhere else: both must happen for the curves to be forced across.
    over = (left & right2) | (ends & right2) | (left & ends2)
    under = (right & left2) | (ends & left2) | (right & ends2)
    return bool(over) and bool(under)
