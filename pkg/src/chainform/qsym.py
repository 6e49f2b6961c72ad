"""Quasi-symmetric functions with integer coefficients.

Elements are sparse maps from compositions to integers, tagged with a basis:
``"M"`` (monomial) or ``"F"`` (fundamental).  In the F basis the key is the
composition ``alpha(I)`` of the pair ``(I, n)``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Mapping

from .errors import OutOfRange, ParseError

Composition = tuple  # of positive ints


# -- compositions -------------------------------------------------------------

def comp_from_set(I: Iterable[int], n: int) -> Composition:
    """``alpha(I) = (i_1, i_2 - i_1, ..., n - i_k)``."""
    members = sorted(set(I))
    for i in members:
        if not 0 < i < n:
            raise OutOfRange(f"{i} is not in 1..{n - 1}")
    if n == 0:
        return ()
    cuts = [0, *members, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def set_from_comp(alpha: Composition) -> tuple[int, ...]:
    """Partial sums of ``alpha`` excluding the total."""
    out, s = [], 0
    for part in alpha[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def check_composition(alpha: Iterable[int]) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 1 for a in alpha):
        raise OutOfRange(f"composition parts must be positive: {alpha}")
    return alpha


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, by length then lexicographically."""
    if n == 0:
        yield ()
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            yield comp_from_set(cuts, n)


def term_key(alpha: Composition):
    return (sum(alpha), len(alpha), alpha)


# -- expressions --------------------------------------------------------------

class QSymExpr:
    """An integer combination of ``M_alpha`` or ``F_alpha`` basis elements."""

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping[Composition, int] | None = None, basis: str = "M"):
        if basis not in ("M", "F"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = {tuple(k): int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, basis="M"):
        return cls({(): 1}, basis)

    @classmethod
    def zero(cls, basis="M"):
        return cls({}, basis)

    @classmethod
    def monomial(cls, alpha, coeff=1):
        return cls({check_composition(alpha): coeff}, "M")

    @classmethod
    def fundamental(cls, I, n, coeff=1):
        return cls({comp_from_set(I, n): coeff}, "F")

    def to_M(self) -> QSymExpr:
        return self if self.basis == "M" else f_to_m(self)

    def to_F(self) -> QSymExpr:
        return self if self.basis == "F" else m_to_f(self)

    def in_basis(self, basis: str) -> QSymExpr:
        return self.to_M() if basis == "M" else self.to_F()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QSymExpr({(): other}, self.basis)
        if not isinstance(other, QSymExpr):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_M().terms == other.to_M().terms

    def __hash__(self):
        return hash(frozenset(self.to_M().terms.items()))

    def _combine(self, other, sign):
        if other.basis != self.basis:
            other = other.in_basis(self.basis)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + sign * v
        return QSymExpr(out, self.basis)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return QSymExpr({k: -v for k, v in self.terms.items()}, self.basis)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSymExpr({k: other * v for k, v in self.terms.items()}, self.basis)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = QSymExpr.one()
        for _ in range(k):
            out = mul(out, self)
        return out

    def degree_part(self, n: int) -> QSymExpr:
        return QSymExpr({k: v for k, v in self.terms.items() if sum(k) == n}, self.basis)

    def counit(self) -> int:
        return self.terms.get((), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_key(kv[0]))

    def __str__(self):
        return render_qsym(self)

    def __repr__(self):
        return f"QSymExpr({render_qsym(self)!r})"


def _render_key(alpha, basis):
    if basis == "M":
        return "M[" + ",".join(map(str, alpha)) + "]"
    return "F[" + ",".join(map(str, set_from_comp(alpha))) + f"|{sum(alpha)}]"


def render_qsym(a: QSymExpr) -> str:
    """``+1 M[2] +2 M[1,1]``; the zero element renders as ``0``."""
    if not a.terms:
        return "0"
    return " ".join(f"{c:+d} {_render_key(k, a.basis)}" for k, c in a.sorted_terms())


_TERM = re.compile(r"([+-]\d+)\s*\*?\s*([MF])\[([^\]]*)\]")


def parse_qsym(text: str) -> QSymExpr:
    """Inverse of :func:`render_qsym`; mixed bases are converted to the first one seen."""
    text = text.strip()
    if text == "0":
        return QSymExpr()
    pos, out = 0, None
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise ParseError(f"unexpected {text[pos:m.start()]!r}")
        pos = m.end()
        coeff, basis, body = int(m.group(1)), m.group(2), m.group(3)
        try:
            if basis == "M":
                parts = [p for p in body.split(",") if p.strip()]
                term = QSymExpr.monomial([int(p) for p in parts], coeff)
            else:
                left, n = body.split("|")
                members = [int(p) for p in left.split(",") if p.strip()]
                term = QSymExpr.fundamental(members, int(n), coeff)
        except (ValueError, OutOfRange) as exc:
            raise ParseError(f"bad term {m.group(0)!r}: {exc}") from None
        out = term if out is None else out + term
    if out is None or text[pos:].strip():
        raise ParseError(f"cannot parse {text!r}")
    return out


# -- basis change -------------------------------------------------------------

def _supersets(alpha: Composition):
    n = sum(alpha)
    I = set(set_from_comp(alpha))
    free = [j for j in range(1, n) if j not in I]
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield k, comp_from_set(I.union(extra), n)


def m_to_f(a: QSymExpr) -> QSymExpr:
    """``M_alpha = sum over J containing I(alpha) of (-1)^|J - I(alpha)| F_J``."""
    if a.basis == "F":
        return a
    out: dict = defaultdict(int)
    for alpha, c in a.terms.items():
        for k, beta in _supersets(alpha):
            out[beta] += (-1) ** k * c
    return QSymExpr(out, "F")


def f_to_m(a: QSymExpr) -> QSymExpr:
    """``F_I = sum over J containing I of M_alpha(J)``."""
    if a.basis == "M":
        return a
    out: dict = defaultdict(int)
    for alpha, c in a.terms.items():
        for _, beta in _supersets(alpha):
            out[beta] += c
    return QSymExpr(out, "M")


# -- product ------------------------------------------------------------------

@lru_cache(maxsize=None)
def quasi_shuffle(a: Composition, b: Composition) -> tuple:
    """Overlapping shuffle of two compositions, as ``((composition, multiplicity), ...)``."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict = defaultdict(int)
    for w, c in quasi_shuffle(a[1:], b):
        out[(a[0],) + w] += c
    for w, c in quasi_shuffle(a, b[1:]):
        out[(b[0],) + w] += c
    for w, c in quasi_shuffle(a[1:], b[1:]):
        out[(a[0] + b[0],) + w] += c
    return tuple(sorted(out.items()))


def mul(a: QSymExpr, b: QSymExpr) -> QSymExpr:
    """Product in the M basis; F inputs are converted first."""
    a, b = a.to_M(), b.to_M()
    out: dict = defaultdict(int)
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            for w, c in quasi_shuffle(x, y):
                out[w] += c * cx * cy
    return QSymExpr(out, "M")


# -- coproduct ----------------------------------------------------------------

class QSymTensor:
    """Sparse element of ``QSym (x) QSym`` in the ``M (x) M`` basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {(tuple(a), tuple(b)): int(c) for (a, b), c in (terms or {}).items() if c}

    def __eq__(self, other):
        if not isinstance(other, QSymTensor):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return QSymTensor(out)

    def __mul__(self, other):
        """Componentwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
        if isinstance(other, int):
            return QSymTensor({k: other * v for k, v in self.terms.items()})
        out: dict = defaultdict(int)
        for (a, b), c1 in self.terms.items():
            for (x, y), c2 in other.terms.items():
                for u, cu in quasi_shuffle(a, x):
                    for v, cv in quasi_shuffle(b, y):
                        out[u, v] += c1 * c2 * cu * cv
        return QSymTensor(out)

    __rmul__ = __mul__

    @classmethod
    def pure(cls, a: QSymExpr, b: QSymExpr) -> QSymTensor:
        a, b = a.to_M(), b.to_M()
        return cls({(x, y): cx * cy for x, cx in a.terms.items() for y, cy in b.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (term_key(kv[0][0]), term_key(kv[0][1])))
        return " ".join(f"{c:+d} {_render_key(a, 'M')} (x) {_render_key(b, 'M')}" for (a, b), c in items)

    __repr__ = __str__


def coproduct(a: QSymExpr) -> QSymTensor:
    """``Delta M_alpha = sum_j M_{alpha<=j} (x) M_{alpha>j}``."""
    out: dict = defaultdict(int)
    for alpha, c in a.to_M().terms.items():
        for j in range(len(alpha) + 1):
            out[alpha[:j], alpha[j:]] += c
    return QSymTensor(out)


def counit(a: QSymExpr) -> int:
    return a.to_M().counit()


# -- antipode -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _antipode_monomial(alpha: Composition) -> tuple:
    if not alpha:
        return (((), 1),)
    acc = QSymExpr({alpha: -1})
    for j in range(1, len(alpha)):
        left = QSymExpr(dict(_antipode_monomial(alpha[:j])))
        acc = acc - mul(left, QSymExpr({alpha[j:]: 1}))
    return tuple(acc.terms.items())


def antipode(a: QSymExpr) -> QSymExpr:
    """Convolution inverse of the identity, by recursion on length."""
    out: dict = defaultdict(int)
    for alpha, c in a.to_M().terms.items():
        for beta, cb in _antipode_monomial(alpha):
            out[beta] += c * cb
    return QSymExpr(out, "M")


# -- polynomial oracle --------------------------------------------------------

def poly_mul(p: Mapping, q: Mapping) -> dict:
    out: dict = defaultdict(int)
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return {k: v for k, v in out.items() if v}


def expand_polynomial(a: QSymExpr, k: int) -> dict[tuple[int, ...], int]:
    """Set ``x_{k+1} = x_{k+2} = ... = 0``; returns exponent vector -> coefficient.

    Both bases expand straight from their defining sums, so this is usable as
    an oracle for the basis changes and the product.
    """
    if k < 1:
        raise OutOfRange("need at least one variable")
    out: dict = defaultdict(int)
    for alpha, c in a.terms.items():
        if a.basis == "M":
            for idx in combinations(range(k), len(alpha)):
                e = [0] * k
                for i, part in zip(idx, alpha):
                    e[i] = part
                out[tuple(e)] += c
        else:
            n = sum(alpha)
            strict = set(set_from_comp(alpha))
            for js in combinations_with_replacement(range(k), n):
                if any(js[i - 1] == js[i] for i in strict):
                    continue
                e = [0] * k
                for j in js:
                    e[j] += 1
                out[tuple(e)] += c
    return {e: v for e, v in out.items() if v}
