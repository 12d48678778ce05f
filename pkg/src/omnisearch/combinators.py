"""Closure operations on searchable sets: decidable restriction, images,
binary unions and binary products."""

from __future__ import annotations

from typing import Any, Callable, NamedTuple

from .core import Predicate, Selector, bit, exists_from_selector


class PairPoint(NamedTuple):
    first: Any
    second: Any


def intersect_decidable(eps: Selector, member: Predicate) -> Selector:
    """Selector for K restricted to a set decidable on K.

    The restriction must be nonempty; if it is not, the result may fall
    outside it.
    """
    exists_k = exists_from_selector(eps)

    def select(p: Predicate) -> Any:
        both = lambda x: bit(member(x) and p(x))
        if exists_k(both):
            return eps(both)
        return eps(member)

    return select


def image(eps: Selector, f: Callable[[Any], Any]) -> Selector:
    """Selector for f(K): search K for an x whose image satisfies q."""

    def select(q: Predicate) -> Any:
        return f(eps(lambda x: q(f(x))))

    return select


def union(eps_k: Selector, eps_l: Selector) -> Selector:
    def select(p: Predicate) -> Any:
        x = eps_k(p)
        if p(x):
            return x
        return eps_l(p)

    return select


def product_pair(eps_k: Selector, eps_l: Selector) -> Selector:
    """Selector for K x L on predicates of a :class:`PairPoint`.

    First pick x in K such that some y in L completes it, then pick y.
    """
    exists_l = exists_from_selector(eps_l)

    def select(p: Predicate) -> PairPoint:
        x = eps_k(lambda x: exists_l(lambda y: p(PairPoint(x, y))))
        y = eps_l(lambda y: p(PairPoint(x, y)))
        return PairPoint(x, y)

    return select
