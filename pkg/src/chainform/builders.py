"""Named families of edge-labeled posets."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import InvalidPermutation, NotContained, OutOfBounds, TooLong
from .poset import LabeledPoset, build_poset
from .symfunc import check_partition

MAX_BOOLEAN = 10
MAX_WEAK_LENGTH = 8


def boolean_poset(n: int) -> LabeledPoset:
    """Subsets of ``{1..n}``; the cover ``X < X + {i}`` is labeled ``i``.

    Element ids are the subsets' bitmasks.
    """
    if not 0 <= n <= MAX_BOOLEAN:
        raise OutOfBounds(f"boolean poset size must be in 0..{MAX_BOOLEAN}, got {n}")
    covers = [(x, x | 1 << i, i + 1) for x in range(1 << n) for i in range(n) if not x >> i & 1]
    return build_poset(covers, 1 << n)


def chain_poset(word: Sequence[int]) -> LabeledPoset:
    return build_poset([(i, i + 1, lab) for i, lab in enumerate(word)], len(word) + 1)


def _contained(mu, nu):
    return len(mu) <= len(nu) and all(a <= b for a, b in zip(mu, nu))


def young_interval(mu, nu, labeling: str = "content") -> LabeledPoset:
    """The interval ``[mu, nu]`` of Young's lattice.

    Adding a box in row ``i`` (1-based) to reach ``lam`` is labeled
    ``lam_i - i`` (the content of the new box) by default, or ``i - lam_i``
    with ``labeling="row"``.  The two are mirror images; only the content
    labeling makes ``F`` of ``[mu, nu]`` the skew Schur function
    ``s_{nu/mu}``, the row labeling gives its conjugate.
    Ids are assigned by size, then in decreasing lexicographic order.
    """
    if labeling not in ("content", "row"):
        raise ValueError(f"unknown labeling {labeling!r}")
    sign = 1 if labeling == "content" else -1
    mu, nu = check_partition(mu), check_partition(nu)
    if not _contained(mu, nu):
        raise NotContained(f"{mu} is not contained in {nu}")
    rows = len(nu)
    start = tuple(mu) + (0,) * (rows - len(mu))
    seen = {start}
    frontier = [start]
    layers = [[start]]
    edges = []
    while frontier:
        nxt = set()
        for lam in frontier:
            for i in range(rows):
                if lam[i] < nu[i] and (i == 0 or lam[i - 1] > lam[i]):
                    bigger = lam[:i] + (lam[i] + 1,) + lam[i + 1:]
                    edges.append((lam, bigger, sign * (bigger[i] - (i + 1))))
                    nxt.add(bigger)
        frontier = sorted(nxt - seen, reverse=True)
        seen |= nxt
        if frontier:
            layers.append(frontier)
    index = {lam: k for k, lam in enumerate(lam for layer in layers for lam in layer)}
    return build_poset([(index[a], index[b], lab) for a, b, lab in edges], len(index))


def check_permutation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(a) for a in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidPermutation(f"{w} is not a permutation of 1..{len(w)}")
    return w


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def left_mult(i: int, u: tuple[int, ...]) -> tuple[int, ...]:
    """``s_i u``: swap the values ``i`` and ``i + 1`` in one-line notation."""
    return tuple(i + 1 if a == i else i if a == i + 1 else a for a in u)


def _compose(a, b):
    return tuple(a[x - 1] for x in b)


def _inverse(u):
    out = [0] * len(u)
    for pos, val in enumerate(u, 1):
        out[val - 1] = pos
    return tuple(out)


def weak_order_interval(w: Sequence[int]) -> LabeledPoset:
    """``[1, w]`` in the left weak order; ``u < v = s_i u`` is labeled ``i``.

    Maximal chains read ``i_1 i_2 ... i_l`` with ``w = s_{i_l} ... s_{i_1}``.
    Ids are assigned by length, then lexicographically in one-line notation.
    """
    w = check_permutation(w)
    length = inversions(w)
    if length > MAX_WEAK_LENGTH:
        raise TooLong(f"length {length} exceeds {MAX_WEAK_LENGTH}")
    n = len(w)
    ident = tuple(range(1, n + 1))

    def below_w(u):
        return inversions(_compose(w, _inverse(u))) + inversions(u) == length

    seen = {ident}
    queue = deque([ident])
    edges = []
    while queue:
        u = queue.popleft()
        lu = inversions(u)
        for i in range(1, n):
            v = left_mult(i, u)
            if inversions(v) == lu + 1 and below_w(v):
                edges.append((u, v, i))
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    order = sorted(seen, key=lambda u: (inversions(u), u))
    index = {u: k for k, u in enumerate(order)}
    return build_poset([(index[a], index[b], lab) for a, b, lab in edges], len(order))


def longest_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))
