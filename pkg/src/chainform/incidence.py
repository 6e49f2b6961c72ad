"""The incidence Hopf algebra of edge-labeled posets and its map to QSym.

Classes are represented by concrete posets.  Two terms are merged when their
posets are label-equivalent; the surviving representative is the member with
the smallest text serialization.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .generating import fp
from .poset import LabeledPoset, interval, label_equivalent, product
from .qsym import QSymExpr, QSymTensor


def _bucket_key(P: LabeledPoset):
    return (P.n_elems, P.rank, len(P.covers), P.interval_fingerprints[P.bottom, P.top])


def _merge(raw: Iterable[tuple[tuple[LabeledPoset, ...], int]]):
    """Group k-tuples of posets slotwise up to label-equivalence and sum coefficients."""
    buckets: dict = {}
    for posets, c in raw:
        if not c:
            continue
        key = tuple(_bucket_key(P) for P in posets)
        classes = buckets.setdefault(key, [])
        for cls in classes:
            rep = cls[0]
            if all(label_equivalent(P, Q) for P, Q in zip(posets, rep)):
                cls[1] += c
                cls[2] = tuple(min(P, Q, key=LabeledPoset.to_text) for P, Q in zip(posets, cls[2]))
                break
        else:
            classes.append([posets, c, posets])
    out = [(best, c) for classes in buckets.values() for _, c, best in classes if c]
    out.sort(key=lambda t: tuple((P.rank, P.n_elems, P.to_text()) for P in t[0]))
    return tuple(out)


class IncidenceElement:
    """A finite integer combination of label-equivalence classes."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        # trusted: call normalize() for raw input
        self.terms = tuple(terms)

    @classmethod
    def of(cls, P: LabeledPoset, coeff: int = 1) -> IncidenceElement:
        return normalize([(P, coeff)])

    @classmethod
    def one(cls) -> IncidenceElement:
        return cls.of(one_point())

    @classmethod
    def zero(cls) -> IncidenceElement:
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return normalize(list(self.terms) + list(other.terms))

    def __neg__(self):
        return IncidenceElement((P, -c) for P, c in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return normalize([(P, other * c) for P, c in self.terms])
        return hopf_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return not (self - other)

    __hash__ = None

    def degree_part(self, n: int) -> IncidenceElement:
        return IncidenceElement((P, c) for P, c in self.terms if P.rank == n)

    def __str__(self):
        if not self.terms:
            return "0"
        return " ".join(f"{c:+d} * {P.to_inline()}" for P, c in self.terms)

    __repr__ = __str__


class IncidenceTensor:
    """A combination of k-fold tensors of classes; ``arity`` is k."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms=(), arity: int = 2):
        self.terms = tuple(terms)
        self.arity = arity

    @classmethod
    def from_raw(cls, raw, arity: int = 2) -> IncidenceTensor:
        return cls(_merge((tuple(ps), c) for ps, c in raw), arity)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return IncidenceTensor.from_raw(list(self.terms) + list(other.terms), self.arity)

    def __neg__(self):
        return IncidenceTensor(((ps, -c) for ps, c in self.terms), self.arity)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, IncidenceTensor):
            return NotImplemented
        return self.arity == other.arity and not (self - other)

    __hash__ = None

    def expand_slot(self, slot: int, fn: Callable[[LabeledPoset], "IncidenceTensor"]) -> IncidenceTensor:
        """Replace slot ``slot`` of every term by the tensor ``fn(poset)``."""
        raw = []
        arity = self.arity
        for ps, c in self.terms:
            sub = fn(ps[slot])
            arity = self.arity - 1 + sub.arity
            for qs, d in sub.terms:
                raw.append((ps[:slot] + qs + ps[slot + 1:], c * d))
        return IncidenceTensor.from_raw(raw, arity)

    def __str__(self):
        if not self.terms:
            return "0"
        return " ".join(f"{c:+d} * " + " (x) ".join(P.to_inline() for P in ps) for ps, c in self.terms)

    __repr__ = __str__


def one_point() -> LabeledPoset:
    from .builders import chain_poset

    return chain_poset(())


def normalize(raw: Iterable[tuple[LabeledPoset, int]]) -> IncidenceElement:
    """Merge label-equivalent representatives and drop zero coefficients."""
    merged = _merge(((P,), c) for P, c in raw)
    return IncidenceElement((ps[0], c) for ps, c in merged)


def hopf_product(a: IncidenceElement, b: IncidenceElement) -> IncidenceElement:
    return normalize([(product(P, Q), c * d) for P, c in a.terms for Q, d in b.terms])


def poset_coproduct(P: LabeledPoset) -> IncidenceTensor:
    raw = [((interval(P, P.bottom, x), interval(P, x, P.top)), 1) for x in range(P.n_elems)]
    return IncidenceTensor.from_raw(raw)


def hopf_coproduct(a: IncidenceElement) -> IncidenceTensor:
    """``Delta(P) = sum over x of [0, x] (x) [x, 1]``, extended linearly."""
    raw = []
    for P, c in a.terms:
        for ps, d in poset_coproduct(P).terms:
            raw.append((ps, c * d))
    return IncidenceTensor.from_raw(raw)


def counit(a: IncidenceElement) -> int:
    return sum(c for P, c in a.terms if P.rank == 0)


_antipode_cache: dict[LabeledPoset, IncidenceElement] = {}


def poset_antipode(P: LabeledPoset) -> IncidenceElement:
    """``S(P) = -sum over x != top of S([0, x]) [x, 1]``, with ``S`` of a point the point."""
    hit = _antipode_cache.get(P)
    if hit is not None:
        return hit
    if P.rank == 0:
        out = IncidenceElement.of(P)
    else:
        raw = []
        for x in range(P.n_elems):
            if x == P.top:
                continue
            left = poset_antipode(interval(P, P.bottom, x))
            right = interval(P, x, P.top)
            raw += [(product(L, right), -c) for L, c in left.terms]
        out = normalize(raw)
    _antipode_cache[P] = out
    return out


def antipode_incidence(a: IncidenceElement) -> IncidenceElement:
    raw = []
    for P, c in a.terms:
        raw += [(Q, c * d) for Q, d in poset_antipode(P).terms]
    return normalize(raw)


def convolve(t: IncidenceTensor, left: Callable, right: Callable) -> IncidenceElement:
    """``m (left (x) right)`` applied to a 2-tensor; ``left``/``right`` map
    a poset to an IncidenceElement."""
    out = IncidenceElement()
    for (P, Q), c in t.terms:
        out = out + c * hopf_product(left(P), right(Q))
    return out


def phi(a: IncidenceElement) -> QSymExpr:
    """Linear extension of ``P -> F_P``."""
    out = QSymExpr()
    for P, c in a.terms:
        out = out + c * fp(P)
    return out


def phi_tensor(t: IncidenceTensor) -> QSymTensor:
    out = QSymTensor()
    for (P, Q), c in t.terms:
        out = out + c * QSymTensor.pure(fp(P), fp(Q))
    return out
