"""Searchable and exhaustible sets of natural numbers, and the point at infinity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Predicate,
    Quantifier,
    Selector,
    Seq,
    bit,
    exists_from_selector,
    forall_from_selector,
    mu,
    tick,
)


@dataclass(frozen=True)
class NatSet:
    """A set of naturals given by a selector, plus its elements when known."""

    selector: Selector
    elements: tuple[int, ...] | None = None

    def exists(self, p: Predicate) -> int:
        return exists_from_selector(self.selector)(p)

    def forall(self, p: Predicate) -> int:
        return forall_from_selector(self.selector)(p)

    @classmethod
    def finite(cls, xs: Sequence[int]) -> "NatSet":
        return cls(selector_finite(xs), tuple(xs))


def selector_finite(xs: Sequence[int]) -> Selector:
    """First element of ``xs`` satisfying ``p``, else the first element."""
    items = tuple(xs)
    if not items:
        raise ValueError("a finite selector needs at least one element")

    def select(p: Predicate) -> int:
        for x in items:
            tick()
            if p(x):
                return x
        return items[0]

    return select


def selector_from_quantifier_nat(ex: Quantifier) -> Selector:
    """Turn an existential quantifier for nonempty K into a selector by least-number search.

    Returns the least solution in K if there is one, otherwise the least
    element of K.  Diverges when K is empty.
    """

    def select(p: Predicate) -> int:
        if ex(p):
            return mu(lambda n: ex(lambda m: n == m and p(n)))
        return mu(lambda n: ex(lambda m: n == m))

    return select


def sup_nat(fa: Quantifier) -> int:
    """Largest element of a finite set, given its universal quantifier."""
    return mu(lambda m: fa(lambda n: n <= m))


def enumerate_nat(fa: Quantifier, ex: Quantifier) -> list[int]:
    """All elements of a nonempty finite set, ascending."""
    top = sup_nat(fa)
    found: list[int] = []
    while True:
        seen = tuple(found)
        e = mu(lambda y: ex(lambda m: all(m != s for s in seen) and m == y))
        found.append(e)
        if e == top:
            return found


# ---------------------------------------------------------------------------
# one-point compactification of the naturals


def ninf_point(n: int) -> Seq:
    """The sequence 0^n 1^omega, standing for the natural number n."""
    return Seq(lambda i: 0 if i < n else 1)


def ninf_infinity() -> Seq:
    return Seq.const(0)


def selector_ninf() -> Selector:
    """Selector for the naturals-with-infinity, returning the least solution.

    Index ``i`` of the result is 1 iff some ``n <= i`` solves ``p``; when
    nothing does the result is the point at infinity.
    """

    def select(p: Predicate) -> Seq:
        hits: list[int] = []

        def at(i: int) -> int:
            # fill in order so deep reads do not recurse
            while len(hits) <= i:
                n = len(hits)
                prev = hits[n - 1] if n else 0
                hits.append(1 if prev else bit(p(ninf_point(n))))
            return hits[i]

        return Seq(at)

    return select


def ninf_value(alpha: Seq, horizon: int) -> int | None:
    """Decode an N-infinity point read up to ``horizon``; ``None`` means no 1 seen."""
    for i in range(horizon):
        if alpha[i]:
            return i
    return None
