"""Edge-labeled graded posets: construction, intervals, products, chains, descents.

A poset is stored as its labeled Hasse diagram on dense ids ``0..n_elems-1``.
Rank sets ``I`` (subsets of ``{1, ..., n-1}``) are exposed as sorted tuples;
internally they are bitmasks with bit ``j-1`` standing for position ``j``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    CycleDetected,
    DuplicateCover,
    NoUniqueBounds,
    NotComparable,
    NotGraded,
    OutOfRange,
    ParseError,
)

RankSet = tuple  # sorted tuple of ints in 1..n-1

DENSE_LIMIT = 16


# -- rank sets ---------------------------------------------------------------

def mask_to_set(mask: int) -> RankSet:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def set_to_mask(members: Iterable[int]) -> int:
    mask = 0
    for j in members:
        mask |= 1 << (j - 1)
    return mask


def rank_set(members: Iterable[int], n: int) -> RankSet:
    """Validate and sort a subset of ``{1, ..., n-1}``."""
    out = tuple(sorted(set(members)))
    for j in out:
        if not 0 < j < n:
            raise OutOfRange(f"{j} is not in 1..{n - 1}")
    return out


def all_rank_sets(n: int) -> list[RankSet]:
    """Every subset of ``{1, ..., n-1}``, ordered by size then lexicographically."""
    ground = range(1, n)
    return [c for k in range(max(n, 1)) for c in combinations(ground, k)]


def descent_set(word: Sequence[int]) -> RankSet:
    """Positions ``j`` (1-based) with ``word[j-1] > word[j]``."""
    return tuple(j for j in range(1, len(word)) if word[j - 1] > word[j])


# -- the poset ---------------------------------------------------------------

class ChainWord(NamedTuple):
    elements: tuple[int, ...]
    word: tuple[int, ...]


class LabeledPoset:
    """A validated, immutable edge-labeled graded poset.

    Build instances with :func:`build_poset`; the constructor trusts its input.
    """

    def __init__(self, n_elems: int, covers: tuple, ranks: tuple, bottom: int, top: int):
        self.n_elems = n_elems
        self.covers = covers
        self.ranks = ranks
        self.bottom = bottom
        self.top = top
        self.rank = ranks[top]
        up: list[list] = [[] for _ in range(n_elems)]
        down: list[list] = [[] for _ in range(n_elems)]
        for u, v, lab in covers:
            up[u].append((v, lab))
            down[v].append((u, lab))
        self.up = tuple(tuple(a) for a in up)
        self.down = tuple(tuple(sorted(a)) for a in down)

    def __repr__(self):
        return f"LabeledPoset(n_elems={self.n_elems}, rank={self.rank}, covers={len(self.covers)})"

    def __eq__(self, other):
        if not isinstance(other, LabeledPoset):
            return NotImplemented
        return self.n_elems == other.n_elems and self.covers == other.covers

    def __hash__(self):
        return hash((self.n_elems, self.covers))

    @property
    def labels(self) -> list[int]:
        return sorted({lab for _, _, lab in self.covers})

    @cached_property
    def by_rank(self) -> tuple[tuple[int, ...], ...]:
        layers: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for x, r in enumerate(self.ranks):
            layers[r].append(x)
        return tuple(tuple(layer) for layer in layers)

    @cached_property
    def upsets(self) -> tuple[int, ...]:
        """Bitset of ``{z : z >= x}`` for every ``x``."""
        sets = [1 << x for x in range(self.n_elems)]
        for layer in reversed(self.by_rank):
            for x in layer:
                for y, _ in self.up[x]:
                    sets[x] |= sets[y]
        return tuple(sets)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.upsets[x] >> y & 1)

    def elements_between(self, x: int, y: int) -> list[int]:
        if not self.leq(x, y):
            return []
        return [z for z in range(self.n_elems) if self.upsets[x] >> z & 1 and self.upsets[z] >> y & 1]

    @cached_property
    def interval_fingerprints(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Dense descent-count vector of ``[x, y]`` for every pair ``x <= y``."""
        out = {}
        for x in range(self.n_elems):
            for y, counts in _descent_tables(self, x).items():
                out[x, y] = _dense(counts, self.ranks[y] - self.ranks[x])
        return out

    def to_text(self) -> str:
        lines = [f"elements {self.n_elems}"]
        lines += [f"cover {u} {v} {lab}" for u, v, lab in self.covers]
        return "\n".join(lines) + "\n"

    def to_inline(self) -> str:
        body = ", ".join(f"{u}-{v}:{lab}" for u, v, lab in self.covers)
        return f"P({self.n_elems}; {body})" if body else f"P({self.n_elems})"


def build_poset(covers: Iterable[tuple[int, int, int]], n_elems: int) -> LabeledPoset:
    """Validate a labeled cover relation and compute ranks.

    Raises OutOfRange, DuplicateCover, CycleDetected, NoUniqueBounds or NotGraded.
    """
    covers = [(int(u), int(v), int(lab)) for u, v, lab in covers]
    if n_elems < 1:
        raise NoUniqueBounds("a poset needs at least one element")
    seen = set()
    for u, v, _ in covers:
        if not (0 <= u < n_elems and 0 <= v < n_elems):
            raise OutOfRange(f"cover ({u}, {v}) uses an id outside 0..{n_elems - 1}")
        if u == v:
            raise CycleDetected(f"self-cover on {u}")
        if (u, v) in seen:
            raise DuplicateCover(f"cover ({u}, {v}) given twice")
        seen.add((u, v))
    covers.sort()

    indeg = [0] * n_elems
    outdeg = [0] * n_elems
    succ: list[list[int]] = [[] for _ in range(n_elems)]
    for u, v, _ in covers:
        succ[u].append(v)
        indeg[v] += 1
        outdeg[u] += 1

    # Kahn's algorithm; longest-path ranks from the sources.
    rank = [0] * n_elems
    remaining = indeg[:]
    queue = deque(x for x in range(n_elems) if remaining[x] == 0)
    visited = 0
    while queue:
        x = queue.popleft()
        visited += 1
        for y in succ[x]:
            rank[y] = max(rank[y], rank[x] + 1)
            remaining[y] -= 1
            if remaining[y] == 0:
                queue.append(y)
    if visited < n_elems:
        raise CycleDetected("the cover relation contains a cycle")

    minimal = [x for x in range(n_elems) if indeg[x] == 0]
    maximal = [x for x in range(n_elems) if outdeg[x] == 0]
    if len(minimal) != 1:
        raise NoUniqueBounds(f"minimal elements {minimal}")
    if len(maximal) != 1:
        raise NoUniqueBounds(f"maximal elements {maximal}")
    for u, v, _ in covers:
        if rank[v] != rank[u] + 1:
            raise NotGraded(f"cover ({u}, {v}) does not raise rank by one")
    return LabeledPoset(n_elems, tuple(covers), tuple(rank), minimal[0], maximal[0])


# -- chains and descent statistics -------------------------------------------

def iter_chains(P: LabeledPoset, start: int | None = None) -> Iterator[ChainWord]:
    """Maximal chains from ``start`` (default the bottom) up to the top, in
    lexicographic order of element ids."""
    start = P.bottom if start is None else start
    elems = [start]
    word: list[int] = []

    def walk(x):
        if x == P.top:
            yield ChainWord(tuple(elems), tuple(word))
            return
        for y, lab in P.up[x]:
            elems.append(y)
            word.append(lab)
            yield from walk(y)
            elems.pop()
            word.pop()

    yield from walk(start)


def maximal_chains(P: LabeledPoset) -> list[ChainWord]:
    return list(iter_chains(P))


def _descent_tables(P: LabeledPoset, source: int) -> dict[int, dict[int, int]]:
    """For every ``y >= source``: descent mask -> number of maximal chains of ``[source, y]``."""
    base = P.ranks[source]
    states: dict[int, dict] = {source: {(None, 0): 1}}
    for layer in P.by_rank[base:]:
        for v in layer:
            st = states.get(v)
            if st is None:
                continue
            bit = 1 << (P.ranks[v] - base - 1) if P.ranks[v] > base else 0
            for w, lab in P.up[v]:
                tgt = states.setdefault(w, {})
                for (last, mask), c in st.items():
                    m = mask | bit if last is not None and last > lab else mask
                    key = (lab, m)
                    tgt[key] = tgt.get(key, 0) + c
    out = {}
    for y, st in states.items():
        counts: dict[int, int] = {}
        for (_, mask), c in st.items():
            counts[mask] = counts.get(mask, 0) + c
        out[y] = counts
    return out


def _dense(counts: dict[int, int], r: int) -> tuple[int, ...]:
    return tuple(counts.get(m, 0) for m in range(1 << max(r - 1, 0)))


@dataclass(frozen=True)
class FlagStats:
    """Descent counts ``d[I]`` of a poset of rank ``n``.

    ``d`` holds every subset of ``{1..n-1}`` when ``n <= 16`` and only the
    nonzero entries beyond that.  ``f`` is derived on demand.
    """

    n: int
    d: dict = field(compare=True)

    @property
    def dense(self) -> bool:
        return self.n <= DENSE_LIMIT

    @property
    def total(self) -> int:
        return sum(self.d.values())

    def d_at(self, I: Iterable[int]) -> int:
        return self.d.get(rank_set(I, self.n), 0)

    def f_at(self, J: Iterable[int]) -> int:
        jmask = set_to_mask(rank_set(J, self.n))
        return sum(c for I, c in self.d.items() if set_to_mask(I) & ~jmask == 0)

    @cached_property
    def f(self) -> dict:
        """``f[J] = sum of d[I] over I contained in J`` for every ``J``."""
        if not self.dense:
            raise ValueError(f"rank {self.n} is too large for a dense f table; use f_at")
        bits = max(self.n - 1, 0)
        table = [0] * (1 << bits)
        for I, c in self.d.items():
            table[set_to_mask(I)] += c
        for b in range(bits):
            step = 1 << b
            for m in range(1 << bits):
                if m & step:
                    table[m] += table[m ^ step]
        return {J: table[set_to_mask(J)] for J in all_rank_sets(self.n)}


def flag_stats(P: LabeledPoset) -> FlagStats:
    counts = _descent_tables(P, P.bottom)[P.top]
    n = P.rank
    if n <= DENSE_LIMIT:
        d = {I: counts.get(set_to_mask(I), 0) for I in all_rank_sets(n)}
    else:
        d = {mask_to_set(m): c for m, c in sorted(counts.items()) if c}
    return FlagStats(n, d)


def d_from_f(f: dict, n: int) -> dict:
    """Inclusion-exclusion: ``d[I] = sum over J in I of (-1)^|I-J| f[J]``."""
    out = {}
    for I in all_rank_sets(n):
        total = 0
        for k in range(len(I) + 1):
            for J in combinations(I, k):
                total += (-1) ** (len(I) - k) * f.get(J, 0)
        out[I] = total
    return out


# -- constructions -----------------------------------------------------------

def interval(P: LabeledPoset, x: int, y: int) -> LabeledPoset:
    """The induced subposet ``[x, y]`` with inherited labels, ids renumbered in order."""
    for z in (x, y):
        if not 0 <= z < P.n_elems:
            raise OutOfRange(f"element {z} not in poset")
    if not P.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    elems = P.elements_between(x, y)
    index = {z: i for i, z in enumerate(elems)}
    covers = [(index[u], index[v], lab) for u, v, lab in P.covers if u in index and v in index]
    return build_poset(covers, len(elems))


def product(P: LabeledPoset, Q: LabeledPoset) -> LabeledPoset:
    """Cartesian product; ``(p, q)`` gets id ``p * |Q| + q``.

    Q's labels are shifted by ``max(P) - min(Q) + 1`` so the label sets are disjoint.
    """
    shift = 0
    if P.covers and Q.covers:
        shift = max(P.labels) - min(Q.labels) + 1
    nq = Q.n_elems
    covers = []
    for u, v, lab in P.covers:
        covers += [(u * nq + q, v * nq + q, lab) for q in range(nq)]
    for u, v, lab in Q.covers:
        covers += [(p * nq + u, p * nq + v, lab + shift) for p in range(P.n_elems)]
    return build_poset(covers, P.n_elems * nq)


def relabel(P: LabeledPoset, fn: Callable[[int], int]) -> LabeledPoset:
    return build_poset([(u, v, fn(lab)) for u, v, lab in P.covers], P.n_elems)


def _element_invariants(P: LabeledPoset) -> list:
    fps = P.interval_fingerprints
    inv = []
    for x in range(P.n_elems):
        ups = sorted(fps[x, y] for y in range(P.n_elems) if (x, y) in fps)
        downs = sorted(fps[y, x] for y in range(P.n_elems) if (y, x) in fps)
        inv.append((P.ranks[x], fps[P.bottom, x], fps[x, P.top], tuple(ups), tuple(downs)))
    return inv


def label_equivalent(P: LabeledPoset, Q: LabeledPoset) -> bool:
    """Is there an order isomorphism ``P -> Q`` matching the f-vectors of all intervals?

    Backtracking over rank-ordered elements, pruned by per-element invariants.
    Intended for desk-scale posets (a few dozen elements).
    """
    if P == Q:
        return True
    if (P.n_elems, P.rank, len(P.covers)) != (Q.n_elems, Q.rank, len(Q.covers)):
        return False
    if P.interval_fingerprints[P.bottom, P.top] != Q.interval_fingerprints[Q.bottom, Q.top]:
        return False
    inv_p = _element_invariants(P)
    inv_q = _element_invariants(Q)
    if sorted(inv_p) != sorted(inv_q):
        return False

    fp_p = P.interval_fingerprints
    fp_q = Q.interval_fingerprints
    order = [x for layer in P.by_rank for x in layer]
    candidates = {x: [y for y in range(Q.n_elems) if inv_q[y] == inv_p[x]] for x in order}
    image: dict[int, int] = {}
    used = [False] * Q.n_elems

    def consistent(x, y):
        for a, b in image.items():
            if P.leq(a, x) != Q.leq(b, y) or P.leq(x, a) != Q.leq(y, b):
                return False
            if P.leq(a, x) and fp_p[a, x] != fp_q[b, y]:
                return False
            if P.leq(x, a) and fp_p[x, a] != fp_q[y, b]:
                return False
        return True

    def search(i):
        if i == len(order):
            return True
        x = order[i]
        for y in candidates[x]:
            if not used[y] and consistent(x, y):
                image[x] = y
                used[y] = True
                if search(i + 1):
                    return True
                del image[x]
                used[y] = False
        return False

    return search(0)


# -- text format -------------------------------------------------------------

def parse_poset(text: str) -> LabeledPoset:
    """Parse ``elements N`` followed by ``cover U V L`` lines; ``#`` starts a comment."""
    n_elems = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        head, args = line[0], line[1:]
        try:
            if head == "elements" and len(args) == 1:
                if n_elems is not None:
                    raise ParseError(f"line {lineno}: repeated 'elements'")
                n_elems = int(args[0])
            elif head == "cover" and len(args) == 3:
                if n_elems is None:
                    raise ParseError(f"line {lineno}: 'cover' before 'elements'")
                covers.append(tuple(int(a) for a in args))
            else:
                raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers in {raw.strip()!r}") from None
    if n_elems is None:
        raise ParseError("missing 'elements' line")
    return build_poset(covers, n_elems)


def format_poset(P: LabeledPoset) -> str:
    return P.to_text()


def load_poset(path) -> LabeledPoset:
    with open(path) as fh:
        return parse_poset(fh.read())


def save_poset(P: LabeledPoset, path) -> None:
    with open(path, "w") as fh:
        fh.write(P.to_text())
