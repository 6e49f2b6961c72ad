"""Rank selection, flag f-vectors, and (relative) R-labelings.

A chain is *increasing* when its word has no descent, i.e. it is weakly
increasing.  This is the reading under which the weighted rank-selected
chain count reproduces ``f_I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotRelativeRLabeled
from .poset import LabeledPoset, all_rank_sets, rank_set
from .qsym import QSymExpr, comp_from_set


@lru_cache(maxsize=256)
def increasing_chain_counts(P: LabeledPoset) -> dict[tuple[int, int], int]:
    """``(x, y) -> number of descent-free maximal chains of [x, y]`` for all ``x <= y``."""
    out = {}
    for x in range(P.n_elems):
        # state: element -> {last label: count}
        states: dict[int, dict] = {x: {None: 1}}
        for layer in P.by_rank[P.ranks[x]:]:
            for v in layer:
                st = states.get(v)
                if st is None:
                    continue
                out[x, v] = sum(st.values())
                for w, lab in P.up[v]:
                    tgt = states.setdefault(w, {})
                    moved = sum(c for last, c in st.items() if last is None or last <= lab)
                    if moved:
                        tgt[lab] = tgt.get(lab, 0) + moved
    return out


@dataclass(frozen=True)
class RankSelectedPoset:
    """``P(I)``: elements of ``P`` with rank in ``I`` plus the bounds.

    ``covers`` join elements at consecutive selected ranks.  When ``weights``
    is set, the cover ``x < y`` carries a nonnegative integer weight.
    """

    source: LabeledPoset
    selection: tuple[int, ...]
    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    weights: dict | None = None

    def count_chains(self) -> int:
        P = self.source
        counts = {P.bottom: 1}
        below: dict[int, list] = {}
        for x, y in self.covers:
            below.setdefault(y, []).append(x)
        for y in self.elements:
            if y == P.bottom:
                continue
            total = 0
            for x in below.get(y, ()):
                w = 1 if self.weights is None else self.weights[x, y]
                total += counts.get(x, 0) * w
            counts[y] = total
        return counts[P.top]


def rank_selected(P: LabeledPoset, I, weights: str | None = None) -> RankSelectedPoset:
    """Build ``P(I)``.

    ``weights`` is ``None``, ``"increasing"`` (number of increasing chains of
    the cover's interval in ``P``) or ``"indicator"`` (1 if there is one).
    """
    I = rank_set(I, P.rank)
    levels = sorted({0, *I, P.rank})
    elements = tuple(x for r in levels for x in P.by_rank[r])
    covers = []
    for lo, hi in zip(levels, levels[1:]):
        for x in P.by_rank[lo]:
            for y in P.by_rank[hi]:
                if P.leq(x, y):
                    covers.append((x, y))
    wt = None
    if weights is not None:
        inc = increasing_chain_counts(P)
        if weights == "increasing":
            wt = {(x, y): inc[x, y] for x, y in covers}
        elif weights == "indicator":
            wt = {(x, y): int(inc[x, y] > 0) for x, y in covers}
        else:
            raise ValueError(f"unknown weighting {weights!r}")
    return RankSelectedPoset(P, tuple(I), elements, tuple(covers), wt)


def flag_fvector_classic(P: LabeledPoset) -> dict:
    """``phi_I(P)``, the number of maximal chains of ``P(I)``; labels are ignored."""
    return {I: rank_selected(P, I).count_chains() for I in all_rank_sets(P.rank)}


def ehrenborg_ep(P: LabeledPoset) -> QSymExpr:
    phi = flag_fvector_classic(P)
    return QSymExpr({comp_from_set(I, P.rank): c for I, c in phi.items()}, "M")


def weighted_flag_count(P: LabeledPoset, I) -> int:
    return rank_selected(P, I, weights="increasing").count_chains()


def is_r_labeled(P: LabeledPoset) -> bool:
    return all(c == 1 for c in increasing_chain_counts(P).values())


def is_relative_r_labeled(P: LabeledPoset) -> bool:
    inc = increasing_chain_counts(P)
    if any(c > 1 for c in inc.values()):
        return False
    # reach[x]: bitset of y >= x such that [x, y] has an increasing chain
    reach = [0] * P.n_elems
    for (x, y), c in inc.items():
        if c:
            reach[x] |= 1 << y
    downsets = [0] * P.n_elems
    for x in range(P.n_elems):
        up = P.upsets[x]
        for z in range(P.n_elems):
            if up >> z & 1:
                downsets[z] |= 1 << x
    for (a, b), c in inc.items():
        if c:
            continue
        lows = downsets[a]
        x = 0
        while lows:
            if lows & 1 and reach[x] & P.upsets[b]:
                return False
            lows >>= 1
            x += 1
    return True


def relative_flag_count(P: LabeledPoset, I) -> int:
    """Chains of ``P(I)`` avoiding Gamma, where Gamma holds the chains with
    some step ``[t_{i-1}, t_i]`` lacking an increasing chain."""
    if not is_relative_r_labeled(P):
        raise NotRelativeRLabeled("poset is not relative R-labeled")
    return rank_selected(P, I, weights="indicator").count_chains()
