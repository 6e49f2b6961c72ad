"""Test corpus: Boolean posets, Young intervals, weak-order intervals, random posets."""

from __future__ import annotations

import random
from itertools import permutations

from .builders import boolean_poset, weak_order_interval, young_interval
from .poset import LabeledPoset, build_poset
from .symfunc import partitions


def random_graded_poset(rng: random.Random, rank: int, max_width: int = 3,
                        labels: tuple[int, int] = (-2, 3)) -> LabeledPoset:
    """A random edge-labeled graded poset with bounds.

    Middle ranks hold 1..max_width elements; every element gets at least one
    lower and one upper cover.  Labels are drawn with repetition.
    """
    if rank == 0:
        return build_poset([], 1)
    widths = [1] + [rng.randint(1, max_width) for _ in range(rank - 1)] + [1]
    layers, nxt = [], 0
    for w in widths:
        layers.append(list(range(nxt, nxt + w)))
        nxt += w
    pairs = set()
    for lo, hi in zip(layers, layers[1:]):
        for y in hi:
            for x in rng.sample(lo, rng.randint(1, len(lo))):
                pairs.add((x, y))
        for x in lo:
            if not any((x, y) in pairs for y in hi):
                pairs.add((x, rng.choice(hi)))
    covers = [(x, y, rng.randint(*labels)) for x, y in sorted(pairs)]
    return build_poset(covers, nxt)


def young_pairs(max_size: int):
    for n in range(1, max_size + 1):
        for nu in partitions(n):
            for k in range(n + 1):
                for mu in partitions(k):
                    if len(mu) <= len(nu) and all(a <= b for a, b in zip(mu, nu)):
                        yield mu, nu


def _fmt(parts):
    return ",".join(map(str, parts)) or "0"


def corpus(n_random: int = 20, seed: int = 20240611) -> list[tuple[str, LabeledPoset]]:
    """Named posets: ``B0..B4``, all Young intervals with ``|nu| <= 5``, weak-order
    intervals ``[1, w]`` for ``w`` in ``S_4``, and ``n_random`` random posets of rank <= 5."""
    out = [(f"B{n}", boolean_poset(n)) for n in range(5)]
    out += [(f"young[{_fmt(mu)}/{_fmt(nu)}]", young_interval(mu, nu)) for mu, nu in young_pairs(5)]
    out += [(f"weak[{''.join(map(str, w))}]", weak_order_interval(w)) for w in permutations(range(1, 5))]
    rng = random.Random(seed)
    for i in range(n_random):
        out.append((f"random{i:02d}", random_graded_poset(rng, rng.randint(1, 5))))
    return out
