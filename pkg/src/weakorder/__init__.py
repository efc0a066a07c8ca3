"""Weak order on permutations, on total orders of the integers, and on
translation-invariant total orders, with the lattice machinery (joins, meets,
canonical join representations, congruences, quotients) shared between them.
"""

from __future__ import annotations

__version__ = "0.1.0"
