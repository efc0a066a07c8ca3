"""Translation-invariant total orders of the integers with period n.

A total order on the integers is translation-invariant when x before y
implies x + n before y + n.  Such an order splits the integers into a
finite sequence of convex blocks; each block covers a set of residue
classes mod n, is order-isomorphic to the integers, and is either waxing
(x before x + n) or waning (x + n before x).  A block of size k is
written as a window of k consecutive entries, and the whole order as the
left-to-right concatenation of its block windows, waning blocks marked
with '~': "[2,1,3][~0]".

An inversion is a class of pairs <a,b>, a < b, b before a, up to
translating both entries by n.  Containment of inversion sets is a
complete lattice order; joins are computed by a fixpoint on threshold
encodings and meets through the order-reversing involution.

>>> t = parse_windows("[2,1]", 2)
>>> lt_tito(t, 2, 1)
True
>>> format_windows(join_tito([t, parse_windows("[0,3]", 2)]))
'[~2,1]'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

from .crossing import tuples_cross
from .errors import (
    Crossing,
    InconsistentEncoding,
    InvalidWindows,
    MixedSizes,
    NotAWall,
    NotWidelyGenerated,
    NotWrapped,
    ParseError,
)
from .intervals import ZSet

WAXING = "waxing"
WANING = "waning"

ALL_I_FIRST = "all_i_first"
ALL_J_FIRST = "all_j_first"
SHIFT_THRESHOLD = "shift_threshold"


def residue(x: int, n: int) -> int:
    """The representative of x mod n lying in [1..n]."""
    return (x - 1) % n + 1


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True, order=True)
class ReflectionIndex:
    """A pair <a,b>, a < b, up to translating both entries by n.

    The stored representative keeps a in [1..n].  The index is imaginary
    when a and b share a residue class, real otherwise.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got <{self.a},{self.b}>")

    def __str__(self) -> str:
        return format_reflection_index(self)


def reflection_index(a: int, b: int, n: int) -> ReflectionIndex:
    """The canonical representative of the class of <a,b>."""
    if a >= b:
        raise ValueError(f"need a < b, got <{a},{b}>")
    shift = residue(a, n) - a
    return ReflectionIndex(a + shift, b + shift)


def is_imaginary_index(ri: ReflectionIndex, n: int) -> bool:
    return (ri.b - ri.a) % n == 0


def format_reflection_index(ri: ReflectionIndex) -> str:
    return f"<{ri.a},{ri.b}>"


def parse_reflection_index(text: str, n: int) -> ReflectionIndex:
    m = re.fullmatch(r"\s*<\s*(-?\d+)\s*,\s*(-?\d+)\s*>\s*", text)
    if not m:
        raise ParseError(f"expected '<a,b>', got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a >= b:
        raise ParseError(f"need a < b in {text!r}")
    return reflection_index(a, b, n)


@dataclass(frozen=True)
class Block:
    """One block: a direction and a window of consecutive entries."""

    direction: str
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.direction not in (WAXING, WANING):
            raise InvalidWindows(f"unknown direction {self.direction!r}")
        if not self.window:
            raise InvalidWindows("empty block")

    @property
    def size(self) -> int:
        return len(self.window)


@dataclass(frozen=True)
class Tito:
    """A translation-invariant total order, stored block by block.

    Construction validates that every residue class appears in exactly
    one window; the functions in this module return values in canonical
    window form (see normalize_tito).
    """

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidWindows(f"period must be positive, got {self.n}")
        seen: set[int] = set()
        for blk in self.blocks:
            for e in blk.window:
                r = residue(e, self.n)
                if r in seen:
                    raise InvalidWindows(f"residue class of {e} repeated")
                seen.add(r)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise InvalidWindows(f"residue classes {missing} missing")

    def __str__(self) -> str:
        return format_windows(self)


@dataclass(frozen=True)
class WrappedArc:
    """An arc <a,b,L,R> up to translating everything by n.

    The stored representative keeps a in [1..n]; left and right split the
    integers strictly between a and b.  Whether the translate family is
    non-crossing is a separate check (is_wrapped_arc).
    """

    a: int
    b: int
    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got <{self.a},{self.b}>")
        interior = set(range(self.a + 1, self.b))
        if self.left | self.right != interior or self.left & self.right:
            raise ValueError(
                f"left/right must split ({self.a},{self.b}) exclusively"
            )

    def __str__(self) -> str:
        return format_wrapped_arc(self)


def wrapped_arc(
    a: int, b: int, left: Iterable[int], right: Iterable[int], n: int
) -> WrappedArc:
    """The canonical representative of the class of (a, b, left, right)."""
    shift = residue(a, n) - a
    return WrappedArc(
        a + shift,
        b + shift,
        frozenset(x + shift for x in left),
        frozenset(x + shift for x in right),
    )


def format_wrapped_arc(w: WrappedArc) -> str:
    lefts = " ".join(str(x) for x in sorted(w.left))
    rights = " ".join(str(x) for x in sorted(w.right))
    return f"<{w.a},{w.b}|{lefts}|{rights}>"


def parse_wrapped_arc(text: str, n: int) -> WrappedArc:
    m = re.fullmatch(
        r"\s*<\s*(-?\d+)\s*,\s*(-?\d+)\s*\|([^|<>]*)\|([^|<>]*)>\s*", text
    )
    if not m:
        raise ParseError(f"expected '<a,b|l1 l2|r1 r2>', got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    left = frozenset(int(p) for p in m.group(3).split())
    right = frozenset(int(p) for p in m.group(4).split())
    if a >= b:
        raise ParseError(f"need a < b in {text!r}")
    try:
        return wrapped_arc(a, b, left, right, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# ---------------------------------------------------------------------------
# window notation


def parse_windows(text: str, n: int) -> Tito:
    """Parse window notation like "[2,1,3][~0]" and normalize.

    >>> format_windows(parse_windows("[3,6,5][~-64]", 4))
    '[2,1,3][~4]'
    """
    s = text.strip()
    if not s:
        raise ParseError("empty window notation")
    blocks: list[Block] = []
    i = 0
    while i < len(s):
        if s[i] != "[":
            raise ParseError(f"expected '[' at index {i} of {text!r}")
        j = s.find("]", i)
        if j < 0:
            raise ParseError(f"unclosed '[' in {text!r}")
        body = s[i + 1 : j].strip()
        direction = WAXING
        if body.startswith("~"):
            direction = WANING
            body = body[1:].strip()
        if not body:
            raise InvalidWindows(f"empty block in {text!r}")
        entries = []
        for part in body.split(","):
            part = part.strip()
            if not re.fullmatch(r"-?\d+", part):
                raise ParseError(f"bad integer {part!r} in {text!r}")
            entries.append(int(part))
        blocks.append(Block(direction, tuple(entries)))
        i = j + 1
        while i < len(s) and s[i].isspace():
            i += 1
    return normalize_tito(Tito(n, tuple(blocks)))


def format_windows(t: Tito) -> str:
    out = []
    for blk in t.blocks:
        mark = "~" if blk.direction == WANING else ""
        out.append("[" + mark + ",".join(str(e) for e in blk.window) + "]")
    return "".join(out)


def _slide(blk: Block, n: int, up: bool) -> Block:
    # One slide step; up means the entry sum grows by n.
    w = blk.window
    if blk.direction == WAXING:
        nw = w[1:] + (w[0] + n,) if up else (w[-1] - n,) + w[:-1]
    else:
        nw = (w[-1] + n,) + w[:-1] if up else w[1:] + (w[0] - n,)
    return Block(blk.direction, nw)


def normalize_tito(t: Tito) -> Tito:
    """Slide every window to the representative with canonical entry sum.

    For a block of size k the sums in a slide class differ by n, so there
    is exactly one window with sum in [k(k+1)/2, k(k+1)/2 + n - 1]; a
    single block covering all residues lands on the window whose sum is
    n(n+1)/2, the usual normalization for affine permutations.
    """
    blocks = []
    for blk in t.blocks:
        k = blk.size
        lo = k * (k + 1) // 2
        while sum(blk.window) < lo:
            blk = _slide(blk, t.n, up=True)
        while sum(blk.window) > lo + t.n - 1:
            blk = _slide(blk, t.n, up=False)
        blocks.append(blk)
    return Tito(t.n, tuple(blocks))


def standard_tito(n: int) -> Tito:
    """The usual order of the integers: one waxing block [1,...,n]."""
    return Tito(n, (Block(WAXING, tuple(range(1, n + 1))),))


def reversal_tito(n: int) -> Tito:
    """The reversed order of the integers: one waning block [~n,...,1]."""
    return Tito(n, (Block(WANING, tuple(range(n, 0, -1))),))


def all_titos(n: int, lo: int, hi: int) -> list[Tito]:
    """Every canonical-form order whose window entries all lie in [lo, hi]."""
    per_residue = {
        r: [v for v in range(lo, hi + 1) if residue(v, n) == r]
        for r in range(1, n + 1)
    }
    out: list[Tito] = []
    for parts in _ordered_set_partitions(tuple(range(1, n + 1))):
        window_choices = []
        for part in parts:
            k = len(part)
            smin = k * (k + 1) // 2
            choices = []
            for order in permutations(part):
                for values in product(*(per_residue[r] for r in order)):
                    if smin <= sum(values) <= smin + n - 1:
                        choices.append(tuple(values))
            window_choices.append(choices)
        for windows in product(*window_choices):
            for dirs in product((WAXING, WANING), repeat=len(parts)):
                out.append(
                    Tito(
                        n,
                        tuple(
                            Block(d, w) for d, w in zip(dirs, windows)
                        ),
                    )
                )
    return out


def _ordered_set_partitions(
    items: tuple[int, ...],
) -> Iterable[tuple[tuple[int, ...], ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for mask in range(2 ** len(rest)):
        head = (first,) + tuple(r for i, r in enumerate(rest) if mask >> i & 1)
        tail = tuple(r for i, r in enumerate(rest) if not mask >> i & 1)
        for more in _ordered_set_partitions(tail):
            yield (head,) + more
            for k in range(len(more)):
                yield more[: k + 1] + (head,) + more[k + 1 :]


# ---------------------------------------------------------------------------
# comparisons


def _placements(t: Tito) -> dict[int, tuple[int, str, int, int, int]]:
    # residue -> (block index, direction, block size, window index, entry)
    out: dict[int, tuple[int, str, int, int, int]] = {}
    for bi, blk in enumerate(t.blocks):
        for p, e in enumerate(blk.window):
            out[residue(e, t.n)] = (bi, blk.direction, blk.size, p, e)
    return out


def _locate(pl: Mapping[int, tuple[int, str, int, int, int]], x: int, n: int):
    bi, direction, k, p, e = pl[residue(x, n)]
    u = (x - e) // n
    pos = p + u * k if direction == WAXING else p - u * k
    return bi, pos


def lt_tito(t: Tito, a: int, b: int) -> bool:
    """True when a comes strictly before b in the order.

    >>> lt_tito(parse_windows("[1,0,3,2]", 4), 1, 0)
    True
    >>> lt_tito(parse_windows("[~1][2]", 2), 3, 2)
    True
    """
    if a == b:
        return False
    pl = _placements(t)
    ba, pa = _locate(pl, a, t.n)
    bb, pb = _locate(pl, b, t.n)
    if ba != bb:
        return ba < bb
    return pa < pb


def inversion_contains(t: Tito, ri: ReflectionIndex) -> bool:
    """True when <a,b> is an inversion of t, i.e. b comes before a."""
    return lt_tito(t, ri.b, ri.a)


def inversion_indices_upto(t: Tito, bound: int) -> frozenset[ReflectionIndex]:
    """All inversions <a,b> with a in [1..n] and b - a <= bound."""
    out = set()
    for a in range(1, t.n + 1):
        for b in range(a + 1, a + bound + 1):
            if lt_tito(t, b, a):
                out.add(ReflectionIndex(a, b))
    return frozenset(out)


# ---------------------------------------------------------------------------
# threshold encodings

# For residues i, j in [1..n] write D(i,j) = {d : j + dn before i}.  Within
# a waxing block D(i,j) is a down-set (-inf, theta]; within a waning block
# an up-set [theta, inf); across blocks it is empty or everything.  The pair
# forms below record exactly this, and the valid-shift sets V(i,j) =
# D(i,j) restricted to pairs that really are indices (j + dn > i) are what
# the join fixpoint manipulates.


@dataclass(frozen=True, order=True)
class PairForm:
    """Relative order of the translates of residue classes i < j.

    all_i_first / all_j_first: the block of one class lies entirely before
    the block of the other.  shift_threshold: the classes share a block;
    with orientation waxing, j + dn comes before i exactly when d <= shift,
    and with orientation waning exactly when d >= shift.
    """

    i: int
    j: int
    form: str
    shift: int | None = None
    orientation: str | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise InconsistentEncoding(f"bad residue pair ({self.i},{self.j})")
        if self.form == SHIFT_THRESHOLD:
            if self.shift is None or self.orientation not in (WAXING, WANING):
                raise InconsistentEncoding("threshold form needs shift and orientation")
        elif self.form in (ALL_I_FIRST, ALL_J_FIRST):
            if self.shift is not None or self.orientation is not None:
                raise InconsistentEncoding(f"{self.form} carries no shift")
        else:
            raise InconsistentEncoding(f"unknown pair form {self.form!r}")


@dataclass(frozen=True)
class ThresholdEncoding:
    """Finite presentation of an order: direction bits plus pair forms."""

    n: int
    dir: tuple[str, ...]
    pairs: tuple[PairForm, ...]

    def __post_init__(self) -> None:
        if len(self.dir) != self.n:
            raise InconsistentEncoding("one direction bit per residue class")
        if any(d not in (WAXING, WANING) for d in self.dir):
            raise InconsistentEncoding("directions must be waxing or waning")
        expected = [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]
        if [(p.i, p.j) for p in self.pairs] != expected:
            raise InconsistentEncoding("pairs must list each i < j once, sorted")


def encode(t: Tito) -> ThresholdEncoding:
    """Read the direction bits and pair forms off the block windows."""
    n = t.n
    pl = _placements(t)
    dirs = tuple(pl[r][1] for r in range(1, n + 1))
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bi, pi = _locate(pl, i, n)
            bj, pj = _locate(pl, j, n)
            if bi != bj:
                form = ALL_I_FIRST if bi < bj else ALL_J_FIRST
                pairs.append(PairForm(i, j, form))
                continue
            k = pl[i][2]
            if pl[i][1] == WAXING:
                theta = (pi - pj) // k
            else:
                theta = (pj - pi) // k + 1
            pairs.append(PairForm(i, j, SHIFT_THRESHOLD, theta, pl[i][1]))
    return ThresholdEncoding(n, dirs, tuple(pairs))


def _d_form(pair_map: Mapping[tuple[int, int], PairForm], i: int, j: int):
    # D(i,j) as a tagged form: ("empty",), ("all",), or (orientation, theta).
    if i < j:
        p = pair_map[(i, j)]
        if p.form == SHIFT_THRESHOLD:
            return (p.orientation, p.shift)
        return ("empty",) if p.form == ALL_I_FIRST else ("all",)
    p = pair_map[(j, i)]
    if p.form == SHIFT_THRESHOLD:
        if p.orientation == WAXING:
            return (WAXING, -p.shift - 1)
        return (WANING, 1 - p.shift)
    return ("all",) if p.form == ALL_I_FIRST else ("empty",)


def _d_contains(form, d: int) -> bool:
    if form[0] == "empty":
        return False
    if form[0] == "all":
        return True
    if form[0] == WAXING:
        return d <= form[1]
    return d >= form[1]


def decode(e: ThresholdEncoding) -> Tito:
    """Rebuild the order a threshold encoding describes.

    Residues joined by threshold pairs share a block; all_* pairs order the
    blocks; window entries come from a successor walk that the thresholds
    determine.  Every structural failure, and any encoding that survives
    the walk without describing a translation-invariant order, raises
    InconsistentEncoding (decode re-encodes its result and compares).
    """
    n = e.n
    pair_map = {(p.i, p.j): p for p in e.pairs}
    comps = _components(e, pair_map)
    _check_forms(e, pair_map, comps)
    order = _component_order(pair_map, comps)
    blocks = []
    for comp in order:
        direction = e.dir[comp[0] - 1]
        blocks.append(Block(direction, _walk_window(comp, direction, pair_map, e)))
    try:
        t = normalize_tito(Tito(n, tuple(blocks)))
    except InvalidWindows as exc:
        raise InconsistentEncoding(str(exc)) from exc
    if encode(t) != e:
        raise InconsistentEncoding("encoding does not describe a periodic total order")
    return t


def _components(e: ThresholdEncoding, pair_map) -> list[tuple[int, ...]]:
    # Residues linked by a threshold pair must share a block.
    parent = list(range(e.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in e.pairs:
        if p.form == SHIFT_THRESHOLD:
            parent[find(p.i)] = find(p.j)
    groups: dict[int, list[int]] = {}
    for r in range(1, e.n + 1):
        groups.setdefault(find(r), []).append(r)
    return [tuple(sorted(g)) for g in groups.values()]


def _check_forms(e: ThresholdEncoding, pair_map, comps) -> None:
    comp_of = {r: ci for ci, comp in enumerate(comps) for r in comp}
    for comp in comps:
        d0 = e.dir[comp[0] - 1]
        for r in comp:
            if e.dir[r - 1] != d0:
                raise InconsistentEncoding(
                    f"directions disagree inside the block of {comp}"
                )
    for p in e.pairs:
        same = comp_of[p.i] == comp_of[p.j]
        if same and p.form != SHIFT_THRESHOLD:
            raise InconsistentEncoding(
                f"classes {p.i},{p.j} share a block but have form {p.form}"
            )
        if p.form == SHIFT_THRESHOLD and p.orientation != e.dir[p.i - 1]:
            raise InconsistentEncoding(
                f"pair ({p.i},{p.j}) orientation fights the direction bits"
            )


def _component_order(pair_map, comps) -> list[tuple[int, ...]]:
    comp_of = {r: ci for ci, comp in enumerate(comps) for r in comp}
    m = len(comps)
    before = [[False] * m for _ in range(m)]
    for (i, j), p in pair_map.items():
        ci, cj = comp_of[i], comp_of[j]
        if ci == cj:
            continue
        if p.form == ALL_I_FIRST:
            before[ci][cj] = True
        else:
            before[cj][ci] = True
    wins = [sum(row) for row in before]
    ranked = sorted(range(m), key=lambda ci: -wins[ci])
    for a in range(m):
        for b in range(a + 1, m):
            if not before[ranked[a]][ranked[b]] or before[ranked[b]][ranked[a]]:
                raise InconsistentEncoding("block order is not a strict total order")
    return [comps[ci] for ci in ranked]


def _walk_window(
    comp: tuple[int, ...], direction: str, pair_map, e: ThresholdEncoding
) -> tuple[int, ...]:
    n = e.n
    k = len(comp)

    def lt(x: int, y: int) -> bool:
        rx, ry = residue(x, n), residue(y, n)
        ux, uy = (x - rx) // n, (y - ry) // n
        if rx == ry:
            return ux < uy if direction == WAXING else ux > uy
        return _d_contains(_d_form(pair_map, ry, rx), ux - uy)

    def successor(x: int) -> int:
        rx = residue(x, n)
        u = (x - rx) // n
        cands = []
        for j in comp:
            if j == rx:
                cands.append(x + n if direction == WAXING else x - n)
                continue
            form = _d_form(pair_map, rx, j)
            if form[0] == WAXING:
                cands.append(j + (u + form[1] + 1) * n)
            elif form[0] == WANING:
                cands.append(j + (u + form[1] - 1) * n)
            else:
                raise InconsistentEncoding(
                    f"classes {rx},{j} share a block without a threshold"
                )
        best = cands[0]
        for c in cands[1:]:
            if lt(c, best):
                best = c
        return best

    seq = [min(comp)]
    for _ in range(k):
        seq.append(successor(seq[-1]))
    window = tuple(seq[:k])
    closing = seq[0] + n if direction == WAXING else seq[0] - n
    if seq[k] != closing:
        raise InconsistentEncoding(f"positions of block {comp} do not close up")
    if len({residue(x, n) for x in window}) != k:
        raise InconsistentEncoding(f"walk of block {comp} repeats a residue class")
    return window


def encoding_to_json(e: ThresholdEncoding) -> dict:
    """A plain-dict form of the encoding (direction bits plus pair table)."""
    pairs = []
    for p in e.pairs:
        row: dict = {"i": p.i, "j": p.j, "form": p.form}
        if p.form == SHIFT_THRESHOLD:
            row["shift"] = p.shift
            row["orientation"] = p.orientation
        pairs.append(row)
    return {"n": e.n, "dir": list(e.dir), "pairs": pairs}


def encoding_from_json(data: Mapping) -> ThresholdEncoding:
    pairs = tuple(
        PairForm(
            row["i"],
            row["j"],
            row["form"],
            row.get("shift"),
            row.get("orientation"),
        )
        for row in data["pairs"]
    )
    return ThresholdEncoding(int(data["n"]), tuple(data["dir"]), pairs)


# ---------------------------------------------------------------------------
# lattice operations


def _t_min(i: int, j: int) -> int:
    # Least shift d with j + dn > i when j's class is sampled at j.
    return 0 if j > i else 1


def _valid_sets(t: Tito) -> list[list[ZSet]]:
    # V[i][j] = {d : <i, j + dn> is an inversion of t}, 1-indexed.
    n = t.n
    pl = _placements(t)
    V = [[ZSet.empty()] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        bi, di, ki, _, _ = pl[i]
        _, pos_i = _locate(pl, i, n)
        for j in range(1, n + 1):
            bj = pl[j][0]
            tmin = _t_min(i, j)
            if i == j:
                V[i][j] = ZSet.upset(1) if di == WANING else ZSet.empty()
            elif bi != bj:
                V[i][j] = ZSet.empty() if bi < bj else ZSet.upset(tmin)
            else:
                _, pos_j = _locate(pl, j, n)
                if di == WAXING:
                    theta = (pos_i - pos_j) // ki
                    V[i][j] = ZSet.interval(tmin, theta)
                else:
                    theta = (pos_j - pos_i) // ki + 1
                    V[i][j] = ZSet.upset(max(theta, tmin))
    return V


def _close(V: list[list[ZSet]], n: int) -> None:
    # Chain rule: <i, j+dn> and <j, l+en> force <i, l+(d+e)n>, so V[i][l]
    # absorbs the sumset V[i][j] + V[j][l].  A nonempty diagonal entry means
    # the class is waning in the result, which forces the whole tail of
    # imaginary shifts at once; promoting eagerly is also what makes the
    # fixpoint terminate when thresholds would otherwise creep around a
    # cycle forever.
    def promote() -> bool:
        hit = False
        full = ZSet.upset(1)
        for r in range(1, n + 1):
            if not V[r][r].is_empty and V[r][r] != full:
                V[r][r] = full
                hit = True
        return hit

    promote()
    for _ in range(64 * (n + 2) * (n + 2) + _span_bound(V, n)):
        changed = False
        for j in range(1, n + 1):
            for i in range(1, n + 1):
                if V[i][j].is_empty:
                    continue
                for l in range(1, n + 1):
                    if V[j][l].is_empty:
                        continue
                    s = V[i][j].sumset(V[j][l])
                    if not s.issubset(V[i][l]):
                        V[i][l] = V[i][l].union(s)
                        changed = True
        if promote():
            changed = True
        if not changed:
            return
    raise AssertionError("shift fixpoint failed to stabilize")


def _span_bound(V: list[list[ZSet]], n: int) -> int:
    spread = 0
    for row in V[1:]:
        for s in row[1:]:
            for lo, hi in s.parts:
                spread += abs(lo) + (abs(hi) if hi is not None else 0)
    return 8 * (spread + n)


def _tito_from_valid_sets(V: list[list[ZSet]], n: int) -> Tito:
    dirs = tuple(
        WANING if not V[r][r].is_empty else WAXING for r in range(1, n + 1)
    )
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            si, sj = V[i][j], V[j][i]
            if si.is_empty and sj.is_empty:
                pairs.append(PairForm(i, j, SHIFT_THRESHOLD, -1, WAXING))
            elif si.is_empty and not sj.is_finite:
                pairs.append(PairForm(i, j, ALL_I_FIRST))
            elif sj.is_empty and not si.is_finite:
                pairs.append(PairForm(i, j, ALL_J_FIRST))
            elif sj.is_empty and si.is_finite:
                pairs.append(PairForm(i, j, SHIFT_THRESHOLD, si.max(), WAXING))
            elif si.is_empty and sj.is_finite:
                pairs.append(PairForm(i, j, SHIFT_THRESHOLD, -sj.max() - 1, WAXING))
            elif not si.is_finite and not sj.is_finite:
                if si.min() >= 1:
                    theta = si.min()
                elif sj.min() >= 2:
                    theta = 1 - sj.min()
                else:
                    theta = 0
                pairs.append(PairForm(i, j, SHIFT_THRESHOLD, theta, WANING))
            else:
                raise InconsistentEncoding(
                    f"shift sets of classes {i},{j} fit no block pattern"
                )
    return decode(ThresholdEncoding(n, dirs, tuple(pairs)))


def _common_n(ts: Sequence[Tito], n: int | None) -> int:
    sizes = {t.n for t in ts}
    if n is not None:
        sizes.add(n)
    if len(sizes) > 1:
        raise MixedSizes(f"mixed periods {sorted(sizes)}")
    if not sizes:
        raise ValueError("need at least one order or an explicit n")
    return sizes.pop()


def join_tito(ts: Sequence[Tito], n: int | None = None) -> Tito:
    """Least upper bound: close the union of the inversion sets.

    >>> format_windows(join_tito([parse_windows("[2,1]", 2), parse_windows("[0,3]", 2)]))
    '[~2,1]'
    """
    size = _common_n(ts, n)
    if not ts:
        return standard_tito(size)
    V = [[ZSet.empty()] * (size + 1) for _ in range(size + 1)]
    for t in ts:
        W = _valid_sets(t)
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                V[i][j] = V[i][j].union(W[i][j])
    _close(V, size)
    res = _tito_from_valid_sets(V, size)
    assert _valid_sets(res) == V, "fixpoint disagrees with its own result"
    return res


def reverse_tito(t: Tito) -> Tito:
    """The same order read right to left; inversions become non-inversions."""
    blocks = tuple(
        Block(
            WANING if blk.direction == WAXING else WAXING,
            tuple(reversed(blk.window)),
        )
        for blk in reversed(t.blocks)
    )
    return normalize_tito(Tito(t.n, blocks))


def meet_tito(ts: Sequence[Tito], n: int | None = None) -> Tito:
    """Greatest lower bound, computed through the reversing involution."""
    size = _common_n(ts, n)
    return reverse_tito(join_tito([reverse_tito(t) for t in ts], size))


def leq_tito(t1: Tito, t2: Tito) -> bool:
    """Containment of inversion sets, decided on the finite encodings."""
    size = _common_n([t1, t2], None)
    V1, V2 = _valid_sets(t1), _valid_sets(t2)
    return all(
        V1[i][j].issubset(V2[i][j])
        for i in range(1, size + 1)
        for j in range(1, size + 1)
    )


# ---------------------------------------------------------------------------
# walls, covers, arcs


def lower_walls_tito(t: Tito) -> frozenset[ReflectionIndex]:
    """Inversions <a,b> with b immediately before a; at most n of them.

    >>> sorted(str(w) for w in lower_walls_tito(parse_windows("[~2,1]", 2)))
    ['<1,2>', '<2,3>']
    """
    walls = set()
    for blk in t.blocks:
        w = blk.window
        wrap = w[0] + t.n if blk.direction == WAXING else w[0] - t.n
        for u, v in zip(w, w[1:] + (wrap,)):
            if u > v:
                walls.add(reflection_index(v, u, t.n))
    return frozenset(walls)


def flip_tito(t: Tito, w: ReflectionIndex) -> Tito:
    """The cover below t obtained by undoing the wall w.

    A real wall swaps the two residue classes throughout; the imaginary
    wall <a,a+n> turns the waning block [~a] back to waxing.
    """
    w = reflection_index(w.a, w.b, t.n)
    if w not in lower_walls_tito(t):
        raise NotAWall(f"{w} is not a lower wall of {format_windows(t)}")
    n = t.n
    blocks = []
    for blk in t.blocks:
        win = blk.window
        k = blk.size
        hit = None
        for p in range(k - 1):
            if win[p] > win[p + 1] and reflection_index(win[p + 1], win[p], n) == w:
                hit = p
                break
        else:
            wrap = win[0] + n if blk.direction == WAXING else win[0] - n
            if win[-1] > wrap and reflection_index(wrap, win[-1], n) == w:
                hit = k - 1
        if hit is None:
            blocks.append(blk)
        elif hit < k - 1:
            nw = win[:hit] + (win[hit + 1], win[hit]) + win[hit + 2 :]
            blocks.append(Block(blk.direction, nw))
        elif k == 1:
            # the wall is imaginary: the waning singleton becomes waxing
            blocks.append(Block(WAXING, win))
        elif blk.direction == WAXING:
            blocks.append(Block(WAXING, (win[-1] - n,) + win[1:-1] + (win[0] + n,)))
        else:
            blocks.append(Block(WANING, (win[-1] + n,) + win[1:-1] + (win[0] - n,)))
    return normalize_tito(Tito(n, tuple(blocks)))


def is_wrapped_arc(p: WrappedArc, n: int) -> bool:
    """True when no two translates of the arc cross each other."""
    k = 1
    while k * n < p.b - p.a:
        if tuples_cross(
            p.a,
            p.b,
            p.left,
            p.right,
            p.a + k * n,
            p.b + k * n,
            frozenset(x + k * n for x in p.left),
            frozenset(x + k * n for x in p.right),
        ):
            return False
        k += 1
    return True


def wrapped_cross(w1: WrappedArc, w2: WrappedArc, n: int) -> bool:
    """True when some translate of w1 crosses some translate of w2.

    Offsets that pull the spans apart leave the arcs with no common value,
    so only k n within [a1 - b2, b1 - a2] needs checking; for w1 == w2 the
    k = 0 term is the arc against itself and is skipped.
    """
    lo = -((w2.b - w1.a) // n)
    hi = (w1.b - w2.a) // n
    for k in range(lo, hi + 1):
        if k == 0 and w1 == w2:
            continue
        if tuples_cross(
            w1.a,
            w1.b,
            w1.left,
            w1.right,
            w2.a + k * n,
            w2.b + k * n,
            frozenset(x + k * n for x in w2.left),
            frozenset(x + k * n for x in w2.right),
        ):
            return True
    return False


def lower_wrapped_arcs(t: Tito) -> frozenset[WrappedArc]:
    """One arc per lower wall, recording which side each bypassed value takes.

    >>> sorted(str(a) for a in lower_wrapped_arcs(parse_windows("[2][~1]", 2)))
    ['<1,3|2|>']
    """
    arcs = set()
    for w in lower_walls_tito(t):
        left = frozenset(x for x in range(w.a + 1, w.b) if lt_tito(t, x, w.b))
        right = frozenset(range(w.a + 1, w.b)) - left
        arcs.add(WrappedArc(w.a, w.b, left, right))
    return frozenset(arcs)


def ji_from_wrapped_arc(p: WrappedArc, n: int) -> Tito:
    """The unique element with p as its only lower arc.

    The window splits into cases by how far the arc wraps: less than one
    full period, exactly one, or more than one with a + n bypassed right
    or left.
    """
    if not is_wrapped_arc(p, n):
        raise NotWrapped(f"{format_wrapped_arc(p)} crosses its own translates")
    a, b = p.a, p.b
    lefts, rights = sorted(p.left), sorted(p.right)
    if b - a < n:
        window = lefts + [b, a] + rights + list(range(b + 1, n + a))
        return normalize_tito(Tito(n, (Block(WAXING, tuple(window)),)))
    if b - a == n:
        blocks = []
        if lefts:
            blocks.append(Block(WAXING, tuple(lefts)))
        blocks.append(Block(WANING, (a,)))
        if rights:
            blocks.append(Block(WAXING, tuple(rights)))
        return normalize_tito(Tito(n, tuple(blocks)))
    ra, rb = residue(a, n), residue(b, n)
    if a + n in p.right:
        cs = []
        for x in range(1, n + 1):
            if x in (ra, rb):
                continue
            lx = [e for e in p.left if residue(e, n) == x]
            below = a - 1 - (a - 1 - x) % n
            cs.append(max(lx) if lx else below)
        window = sorted(cs) + [b, a]
        return normalize_tito(Tito(n, (Block(WAXING, tuple(window)),)))
    ells, cs, rs = [], [], []
    for x in range(1, n + 1):
        if x in (ra, rb):
            continue
        lx = [e for e in p.left if residue(e, n) == x]
        rx = [e for e in p.right if residue(e, n) == x]
        if lx and rx:
            # the central block wanes, so the translates of the window
            # entry that precede b are those at or above it: min, not max
            cs.append(min(lx))
        elif lx:
            ells.append(max(lx))
        elif rx:
            rs.append(min(rx))
        else:
            raise AssertionError("a span above n covers every residue class")
    blocks = []
    if ells:
        blocks.append(Block(WAXING, tuple(sorted(ells))))
    blocks.append(Block(WANING, tuple(sorted(cs) + [b, a])))
    if rs:
        blocks.append(Block(WAXING, tuple(sorted(rs))))
    return normalize_tito(Tito(n, tuple(blocks)))


def is_widely_generated_tito(t: Tito) -> bool:
    """True when no two consecutive blocks are both waxing."""
    return all(
        not (x.direction == WAXING and y.direction == WAXING)
        for x, y in zip(t.blocks, t.blocks[1:])
    )


def canonical_join_rep_tito(t: Tito) -> frozenset[WrappedArc]:
    """The lower arcs, as the canonical join representation of t."""
    if not is_widely_generated_tito(t):
        raise NotWidelyGenerated(
            f"{format_windows(t)} has two consecutive waxing blocks"
        )
    return lower_wrapped_arcs(t)


def join_of_cyclic_collection(arcs: Iterable[WrappedArc], n: int) -> Tito:
    """Join of the irreducibles of a pairwise non-crossing set of arcs."""
    items = sorted(
        arcs, key=lambda w: (w.a, w.b, tuple(sorted(w.left)))
    )
    for w in items:
        if wrapped_cross(w, w, n):
            raise Crossing(f"{format_wrapped_arc(w)} crosses its own translates")
    for w1, w2 in combinations(items, 2):
        if wrapped_cross(w1, w2, n):
            raise Crossing(
                f"{format_wrapped_arc(w1)} crosses {format_wrapped_arc(w2)}"
            )
    return join_tito([ji_from_wrapped_arc(w, n) for w in items], n)
