"""Finite posets and lattices: checks, semidistributivity, canonical join
representations, congruences, and quotients.

The brute-force machinery here serves as the oracle for the structural
operations elsewhere in the package: weak order posets built from scratch,
congruences generated by collapsing chosen pairs, and the finite quotients of
the infinite lattices (orderings of an integer window).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, permutations
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    MixedSizes,
    NotACongruence,
    NotALattice,
    ParseError,
    PreconditionViolated,
    TooLarge,
)
from .intervals import ZSet
from .sn import Permutation, format_perm, inversions
from .tito import Tito, _close, _tito_from_valid_sets, lt_tito, residue

MAX_POSET = 10_000


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """A finite poset: labels plus a reflexive/antisymmetric/transitive matrix.

    ``leq[i, j]`` holds when ``elements[i] <= elements[j]``.
    """

    elements: tuple[str, ...]
    leq: np.ndarray

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"no element {label!r}") from None

    def leq_labels(self, x: str, y: str) -> bool:
        return bool(self.leq[self.index(x), self.index(y)])

    def __len__(self) -> int:
        return len(self.elements)


def finite_poset(elements: Sequence[str], leq: np.ndarray) -> FinitePoset:
    """Validate and wrap an explicit order matrix."""
    labels = tuple(elements)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate labels")
    m = np.asarray(leq, dtype=bool)
    n = len(labels)
    if m.shape != (n, n):
        raise ValueError(f"matrix shape {m.shape} does not match {n} elements")
    if not m.diagonal().all():
        raise ValueError("order is not reflexive")
    if (m & m.T & ~np.eye(n, dtype=bool)).any():
        raise ValueError("order is not antisymmetric")
    closure = (m.astype(np.uint8) @ m.astype(np.uint8)) > 0
    if (closure & ~m).any():
        raise ValueError("order is not transitive")
    m = m.copy()
    m.setflags(write=False)
    return FinitePoset(labels, m)


def poset_from_pairs(
    elements: Sequence[str], pairs: Iterable[tuple[str, str]]
) -> FinitePoset:
    """Poset generated by relations x <= y; closed reflexively and transitively."""
    labels = tuple(elements)
    idx = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    m = np.eye(n, dtype=bool)
    for x, y in pairs:
        m[idx[x], idx[y]] = True
    while True:
        closure = m | ((m.astype(np.uint8) @ m.astype(np.uint8)) > 0)
        if (closure == m).all():
            break
        m = closure
    return finite_poset(labels, m)


def poset_from_leq(
    elements: Sequence[str], leq: Callable[[str, str], bool]
) -> FinitePoset:
    labels = tuple(elements)
    n = len(labels)
    m = np.empty((n, n), dtype=bool)
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            m[i, j] = leq(x, y)
    return finite_poset(labels, m)


def cover_matrix(p: FinitePoset) -> np.ndarray:
    """cover[i, j] holds when elements[j] covers elements[i]."""
    strict = p.leq & ~np.eye(len(p), dtype=bool)
    via = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
    return strict & ~via


def poset_to_json(p: FinitePoset) -> str:
    cov = cover_matrix(p)
    covers = sorted(
        [p.elements[i], p.elements[j]] for i, j in zip(*np.nonzero(cov))
    )
    return json.dumps({"elements": list(p.elements), "covers": covers}, indent=1)


def poset_from_json(text: str) -> FinitePoset:
    try:
        raw = json.loads(text)
        elements = [str(v) for v in raw["elements"]]
        covers = [(str(a), str(b)) for a, b in raw["covers"]]
    except (ValueError, TypeError, KeyError) as exc:
        raise ParseError(f"bad poset JSON: {exc}") from exc
    return poset_from_pairs(elements, covers)


def poset_to_dot(p: FinitePoset) -> str:
    """Hasse diagram in DOT, drawn upward (bottom elements at rank 0)."""
    cov = cover_matrix(p)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for label in p.elements:
        lines.append(f'  "{label}";')
    for i, j in sorted(zip(*np.nonzero(cov)), key=lambda t: (t[0], t[1])):
        lines.append(f'  "{p.elements[i]}" -> "{p.elements[j]}";')
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# lattice checks


@dataclass(frozen=True, eq=False)
class LatticeReport:
    """Outcome of check_lattice: tables when it is one, a witness when not."""

    is_lattice: bool
    join: np.ndarray | None
    meet: np.ndarray | None
    witness: str | None


def _bound_tables(p: FinitePoset) -> tuple[np.ndarray | None, np.ndarray | None, str | None]:
    n = len(p)
    order = np.argsort(p.leq.sum(axis=0), kind="stable")  # linear extension
    rank_of = np.empty(n, dtype=int)
    rank_of[order] = np.arange(n)
    join = np.full((n, n), -1, dtype=int)
    meet = np.full((n, n), -1, dtype=int)
    for i in range(n):
        for j in range(i, n):
            ub = p.leq[i] & p.leq[j]
            if not ub.any():
                return None, None, f"no upper bound for {p.elements[i]!r}, {p.elements[j]!r}"
            cand = order[np.argmax(ub[order])]
            if (ub & ~p.leq[cand]).any():
                return None, None, f"no least upper bound for {p.elements[i]!r}, {p.elements[j]!r}"
            join[i, j] = join[j, i] = cand
            lb = p.leq[:, i] & p.leq[:, j]
            if not lb.any():
                return None, None, f"no lower bound for {p.elements[i]!r}, {p.elements[j]!r}"
            cand = order[::-1][np.argmax(lb[order[::-1]])]
            if (lb & ~p.leq[:, cand]).any():
                return None, None, f"no greatest lower bound for {p.elements[i]!r}, {p.elements[j]!r}"
            meet[i, j] = meet[j, i] = cand
    return join, meet, None


def check_lattice(p: FinitePoset) -> LatticeReport:
    """Verify every pair has a least upper and greatest lower bound."""
    if len(p) > MAX_POSET:
        raise TooLarge(f"{len(p)} elements (limit {MAX_POSET})")
    join, meet, witness = _bound_tables(p)
    return LatticeReport(witness is None, join, meet, witness)


def _tables(p: FinitePoset) -> tuple[np.ndarray, np.ndarray]:
    report = check_lattice(p)
    if not report.is_lattice:
        raise NotALattice(report.witness or "not a lattice")
    assert report.join is not None and report.meet is not None
    return report.join, report.meet


def join_irreducibles_fin(p: FinitePoset) -> frozenset[str]:
    """Elements with exactly one lower cover."""
    _tables(p)
    cov = cover_matrix(p)
    below = cov.sum(axis=0)
    return frozenset(p.elements[i] for i in range(len(p)) if below[i] == 1)


def canonical_join_rep_fin(p: FinitePoset, x: str) -> frozenset[str] | None:
    """The canonical join representation of x, or None when x has none.

    For each lower cover y of x the candidate joinand is the least z with
    z v y = x; when some cover admits no least such z, no join representation
    of x refines all others.
    """
    join, meet = _tables(p)
    xi = p.index(x)
    cov = cover_matrix(p)
    joinands: set[int] = set()
    for yi in np.nonzero(cov[:, xi])[0]:
        members = np.nonzero(join[:, yi] == xi)[0]
        least = members[0]
        for z in members[1:]:
            least = meet[least, z]
        if join[least, yi] != xi:
            return None
        joinands.add(int(least))
    items = sorted(joinands)
    for a, b in combinations(items, 2):
        assert not (p.leq[a, b] or p.leq[b, a]), "joinands must form an antichain"
    return frozenset(p.elements[i] for i in items)


def is_join_semidistributive_fin(p: FinitePoset) -> bool:
    """x v y = x v z implies x v (y ^ z) = x v y, checked over all triples."""
    join, meet = _tables(p)
    n = len(p)
    for x in range(n):
        col = join[:, x]
        for t in np.unique(col):
            members = np.nonzero(col == t)[0]
            m = members[0]
            for z in members[1:]:
                m = meet[m, z]
            if join[m, x] != t:
                return False
    return True


def is_meet_semidistributive_fin(p: FinitePoset) -> bool:
    """Dual of is_join_semidistributive_fin."""
    join, meet = _tables(p)
    n = len(p)
    for x in range(n):
        col = meet[:, x]
        for t in np.unique(col):
            members = np.nonzero(col == t)[0]
            m = members[0]
            for z in members[1:]:
                m = join[m, z]
            if meet[m, x] != t:
                return False
    return True


def is_semidistributive_fin(p: FinitePoset) -> bool:
    return is_join_semidistributive_fin(p) and is_meet_semidistributive_fin(p)


# ---------------------------------------------------------------------------
# congruences


@dataclass(frozen=True, eq=False)
class Partition:
    """An equivalence relation on a poset's labels, as label -> class id."""

    class_of: Mapping[str, int]

    def blocks(self) -> frozenset[frozenset[str]]:
        by_id: dict[int, set[str]] = {}
        for label, cid in self.class_of.items():
            by_id.setdefault(cid, set()).add(label)
        return frozenset(frozenset(block) for block in by_id.values())


def partition_from_blocks(blocks: Iterable[Iterable[str]]) -> Partition:
    class_of: dict[str, int] = {}
    for cid, block in enumerate(blocks):
        for label in block:
            if label in class_of:
                raise ValueError(f"label {label!r} appears in two blocks")
            class_of[label] = cid
    return Partition(class_of)


def discrete_partition(p: FinitePoset) -> Partition:
    return Partition({label: i for i, label in enumerate(p.elements)})


def _class_ids(p: FinitePoset, part: Partition) -> np.ndarray:
    if set(part.class_of) != set(p.elements):
        raise ValueError("partition does not cover exactly the poset elements")
    return np.array([part.class_of[label] for label in p.elements], dtype=int)


def congruence_failure(p: FinitePoset, part: Partition) -> str | None:
    """None when ``part`` is a lattice congruence, else the violated condition.

    Checks the order-theoretic characterization: every class is an interval,
    and the maps sending an element to the bottom (resp. top) of its class are
    order-preserving.
    """
    _tables(p)
    ids = _class_ids(p, part)
    n = len(p)
    down = np.empty(n, dtype=int)
    up = np.empty(n, dtype=int)
    for cid in np.unique(ids):
        members = np.nonzero(ids == cid)[0]
        inside = p.leq[np.ix_(members, members)]
        bottoms = members[inside.sum(axis=1) == len(members)]
        tops = members[inside.sum(axis=0) == len(members)]
        if len(bottoms) != 1 or len(tops) != 1:
            return f"class of {p.elements[members[0]]!r} is not an interval"
        lo, hi = bottoms[0], tops[0]
        span = np.nonzero(p.leq[lo] & p.leq[:, hi])[0]
        if not (ids[span] == cid).all():
            return f"class of {p.elements[lo]!r} is not an interval"
        down[members] = lo
        up[members] = hi
    for i in range(n):
        above = np.nonzero(p.leq[i])[0]
        if not p.leq[down[i], down[above]].all():
            return "bottom-of-class map is not order-preserving"
        if not p.leq[up[i], up[above]].all():
            return "top-of-class map is not order-preserving"
    return None


def is_congruence(p: FinitePoset, part: Partition) -> bool:
    return congruence_failure(p, part) is None


def quotient_lattice(p: FinitePoset, part: Partition) -> FinitePoset:
    """The quotient lattice; classes are labeled by their bottom elements."""
    failure = congruence_failure(p, part)
    if failure is not None:
        raise NotACongruence(failure)
    ids = _class_ids(p, part)
    reps: dict[int, int] = {}
    for cid in np.unique(ids):
        members = np.nonzero(ids == cid)[0]
        inside = p.leq[np.ix_(members, members)]
        reps[int(cid)] = int(members[inside.sum(axis=1) == len(members)][0])
    order = sorted(reps.values())
    labels = [p.elements[i] for i in order]
    m = p.leq[np.ix_(order, order)]
    return finite_poset(labels, m)


def congruence_generated_by(
    p: FinitePoset, pairs: Iterable[tuple[str, str]]
) -> Partition:
    """Smallest lattice congruence identifying each given pair.

    Closes under transitivity and under joining/meeting both sides with every
    element; this is the brute-force oracle the arc-ideal machinery is tested
    against.
    """
    join, meet = _tables(p)
    n = len(p)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    work: list[tuple[int, int]] = [
        (p.index(a), p.index(b)) for a, b in pairs
    ]
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[ra] = rb
        for z in range(n):
            ja, jb = join[a, z], join[b, z]
            if find(ja) != find(jb):
                work.append((int(ja), int(jb)))
            ma, mb = meet[a, z], meet[b, z]
            if find(ma) != find(mb):
                work.append((int(ma), int(mb)))
    roots = sorted({find(i) for i in range(n)})
    renumber = {r: k for k, r in enumerate(roots)}
    part = Partition(
        {label: renumber[find(i)] for i, label in enumerate(p.elements)}
    )
    failure = congruence_failure(p, part)
    if failure is not None:
        raise NotACongruence(f"closure produced a non-congruence: {failure}")
    return part


# ---------------------------------------------------------------------------
# weak order posets and window quotients


def _containment_poset(labels: Sequence[str], masks: Sequence[int]) -> FinitePoset:
    n = len(labels)
    m = np.empty((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            m[i, j] = masks[i] & ~masks[j] == 0
    return finite_poset(labels, m)


def weak_order_poset(n: int) -> FinitePoset:
    """The weak order on all permutations of [1..n], by inversion containment."""
    if n > 7:
        raise TooLarge(f"weak order on S_{n} has {n}! elements")
    if n < 1:
        raise PreconditionViolated("need n >= 1")
    pair_index = {
        pair: k for k, pair in enumerate(combinations(range(1, n + 1), 2))
    }
    labels = []
    masks = []
    for word in permutations(range(1, n + 1)):
        perm = Permutation(n, word)
        labels.append(format_perm(perm))
        mask = 0
        for pair in inversions(perm).pairs:
            mask |= 1 << pair_index[pair]
        masks.append(mask)
    return _containment_poset(labels, masks)


def window_word_label(word: Sequence[int]) -> str:
    return ",".join(str(v) for v in word)


def tot_quotient(a: int, b: int) -> FinitePoset:
    """The weak order on the orderings of the integer window [a, b].

    This is the quotient of the weak order on total orders of the integers by
    the congruence that only remembers which pairs inside [a, b] are inverted;
    it is isomorphic to the weak order on S_{b-a+1}.
    """
    if a >= b:
        raise PreconditionViolated(f"need a < b, got [{a}, {b}]")
    width = b - a + 1
    if width > 7:
        raise TooLarge(f"window [{a}, {b}] has {width}! orderings")
    values = list(range(a, b + 1))
    pair_index = {pair: k for k, pair in enumerate(combinations(values, 2))}
    labels = []
    masks = []
    for word in permutations(values):
        labels.append(window_word_label(word))
        mask = 0
        seen: set[int] = set()
        for v in word:
            for u in seen:
                if u > v:
                    mask |= 1 << pair_index[(v, u)]
            seen.add(v)
        masks.append(mask)
    return _containment_poset(labels, masks)


# ---------------------------------------------------------------------------
# finite quotients of the order on translation-invariant total orders


@dataclass(frozen=True, eq=False)
class TitoQuotient:
    """A cofinite quotient: orderings of an integer window that extend to a
    translation-invariant total order, each carrying the minimal order that
    induces it."""

    n: int
    a: int
    b: int
    poset: FinitePoset
    reps: Mapping[str, Tito]


def tito_window_word(t: Tito, a: int, b: int) -> tuple[int, ...]:
    """The integers of [a, b] listed bottom-up in the order given by t."""
    order = cmp_to_key(lambda x, y: -1 if lt_tito(t, x, y) else 1)
    return tuple(sorted(range(a, b + 1), key=order))


def _shift_of(x: int, y: int, n: int) -> tuple[int, int, int]:
    # <x, y> as a residue pair with shift: y - (x - i) = j + dn.
    i, j = residue(x, n), residue(y, n)
    return i, j, (y - x - (j - i)) // n


def tito_quotient(n: int, a: int, b: int) -> TitoQuotient:
    """The quotient by the congruence remembering the inversions inside
    [a, b].

    An ordering of the window is kept when the inversions it forces, closed
    under the shift fixpoint, force nothing further inside the window; the
    closure then decodes to the minimal order of the class, and any order
    inducing the word sits above it.  Classes are ordered by containment of
    their window inversions, which agrees with the order on the minimal
    representatives.
    """
    if a >= b:
        raise PreconditionViolated(f"need a < b, got [{a}, {b}]")
    width = b - a + 1
    if width > 7:
        raise TooLarge(f"window [{a}, {b}] has {width}! orderings")
    values = list(range(a, b + 1))
    window_pairs = list(combinations(values, 2))
    pair_index = {pair: k for k, pair in enumerate(window_pairs)}
    labels: list[str] = []
    masks: list[int] = []
    reps: dict[str, Tito] = {}
    for word in permutations(values):
        pos = {v: k for k, v in enumerate(word)}
        forced = {(x, y) for x, y in window_pairs if pos[y] < pos[x]}
        V = [[ZSet.empty()] * (n + 1) for _ in range(n + 1)]
        for x, y in forced:
            i, j, d = _shift_of(x, y, n)
            V[i][j] = V[i][j].union(ZSet.interval(d, d))
        _close(V, n)
        extendable = True
        for x, y in window_pairs:
            i, j, d = _shift_of(x, y, n)
            if (d in V[i][j]) != ((x, y) in forced):
                extendable = False
                break
        if not extendable:
            continue
        label = window_word_label(word)
        labels.append(label)
        masks.append(sum(1 << pair_index[p] for p in forced))
        reps[label] = _tito_from_valid_sets(V, n)
    return TitoQuotient(n, a, b, _containment_poset(labels, masks), reps)
