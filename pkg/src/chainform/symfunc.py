"""Symmetric functions in the monomial and Schur bases, and Schur expansions of ``F_P``."""

from __future__ import annotations

import re
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import NotSymmetric, OutOfRange, ParseError, WeightMismatch
from .qsym import QSymExpr

Partition = tuple  # weakly decreasing positive ints


def check_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise OutOfRange(f"not a partition: {lam}")
    return lam


def sort_composition(alpha) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def dominates(lam: Partition, mu: Partition) -> bool:
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def _term_key(lam):
    # weight ascending, then (n), (n-1,1), ... as partitions() yields them
    return (sum(lam), tuple(-p for p in lam))


class SymExpr:
    """Integer combination of ``m_lambda`` (basis ``"m"``) or ``s_lambda`` (basis ``"s"``)."""

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping | None = None, basis: str = "m"):
        if basis not in ("m", "s"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = {tuple(k): int(v) for k, v in (terms or {}).items() if v}

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return schur_to_m(self).terms == schur_to_m(other).terms

    def __add__(self, other):
        if other.basis != self.basis:
            other = m_to_schur(other) if self.basis == "s" else schur_to_m(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymExpr(out, self.basis)

    def __neg__(self):
        return SymExpr({k: -v for k, v in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def to_qsym(self) -> QSymExpr:
        """Expand ``m_mu`` as the sum of ``M_alpha`` over rearrangements of ``mu``."""
        from itertools import permutations

        out: dict = defaultdict(int)
        for mu, c in schur_to_m(self).terms.items():
            for alpha in set(permutations(mu)):
                out[alpha] += c
        return QSymExpr(out, "M")

    def __str__(self):
        return render_sym(self)

    def __repr__(self):
        return f"SymExpr({render_sym(self)!r})"


def render_sym(a: SymExpr) -> str:
    if not a.terms:
        return "0"
    return " ".join(f"{c:+d} {a.basis}[{','.join(map(str, lam))}]" for lam, c in a.sorted_terms())


_TERM = re.compile(r"([+-]\d+)\s*\*?\s*([ms])\[([^\]]*)\]")


def parse_sym(text: str) -> SymExpr:
    text = text.strip()
    if text == "0":
        return SymExpr()
    pos, terms, basis = 0, defaultdict(int), None
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise ParseError(f"unexpected {text[pos:m.start()]!r}")
        pos = m.end()
        if basis is not None and m.group(2) != basis:
            raise ParseError("mixed m and s terms")
        basis = m.group(2)
        try:
            lam = check_partition(int(p) for p in m.group(3).split(",") if p.strip())
        except (ValueError, OutOfRange) as exc:
            raise ParseError(str(exc)) from None
        terms[lam] += int(m.group(1))
    if basis is None or text[pos:].strip():
        raise ParseError(f"cannot parse {text!r}")
    return SymExpr(terms, basis)


# -- Kostka numbers -----------------------------------------------------------

def _horizontal_strips(outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions ``inner`` with ``outer / inner`` a horizontal strip of ``size`` boxes."""
    rows = len(outer)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        nxt = outer[i + 1] if i + 1 < rows else 0
        # row i may shrink down to the length of the row below
        for take in range(min(left, outer[i] - nxt), -1, -1):
            yield from rec(i + 1, left - take, acc + [outer[i] - take])

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    # the largest entry, len(mu), fills a horizontal strip of size mu[-1]
    return sum(_kostka(inner, mu[:-1]) for inner in _horizontal_strips(lam, mu[-1]))


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    Tableaux are built by peeling off the largest entry as a horizontal strip.
    ``mu`` may be any composition; the count only depends on its sorted form.
    """
    lam = check_partition(lam)
    mu = tuple(int(p) for p in mu)
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    return _kostka(lam, tuple(p for p in mu if p))


# -- basis change -------------------------------------------------------------

def schur_to_m(a: SymExpr) -> SymExpr:
    """``s_lambda = sum_mu K(lambda, mu) m_mu``."""
    if a.basis == "m":
        return a
    out: dict = defaultdict(int)
    for lam, c in a.terms.items():
        for mu in partitions(sum(lam)):
            k = _kostka(lam, mu)
            if k:
                out[mu] += c * k
    return SymExpr(out, "m")


def m_to_schur(a: SymExpr) -> SymExpr:
    """Invert the unitriangular Kostka matrix by peeling off the lex-largest term."""
    if a.basis == "s":
        return a
    rest = dict(a.terms)
    out: dict = {}
    while rest:
        lam = max(rest, key=lambda p: (sum(p), p))
        c = rest[lam]
        out[lam] = c
        for mu in partitions(sum(lam)):
            k = _kostka(lam, mu)
            if k:
                v = rest.get(mu, 0) - c * k
                if v:
                    rest[mu] = v
                else:
                    rest.pop(mu, None)
        assert lam not in rest
    return SymExpr(out, "s")


# -- symmetry -----------------------------------------------------------------

def is_symmetric(a: QSymExpr) -> SymExpr | None:
    """The m-expansion of ``a`` if its ``M_alpha`` coefficients only depend on
    ``sort_composition(alpha)``; ``None`` otherwise."""
    from itertools import permutations

    a = a.to_M()
    by_shape: dict = {}
    for alpha, c in a.terms.items():
        by_shape.setdefault(sort_composition(alpha), set()).add(c)
    for mu, coeffs in by_shape.items():
        if len(coeffs) != 1:
            return None
        for alpha in set(permutations(mu)):
            if alpha not in a.terms:
                return None
    return SymExpr({mu: coeffs.pop() for mu, coeffs in by_shape.items()}, "m")


def schur_expansion(P) -> dict:
    """``lambda -> c^P_lambda``, the Schur coefficients of ``F_P``."""
    from .generating import fp

    sym = is_symmetric(fp(P))
    if sym is None:
        raise NotSymmetric("F_P is not symmetric")
    schur = m_to_schur(sym)
    assert schur_to_m(schur) == sym
    return dict(schur.sorted_terms())
