"""Countable products of searchable sets.

Every factor lives in the same value domain, so a point of the product is a
single :class:`~omnisearch.core.Seq` and a family of factor selectors is a
``Seq`` of selectors.
"""

from __future__ import annotations

from typing import Any, Sequence

from .core import (
    Lazy,
    Predicate,
    Selector,
    Seq,
    bit,
    count_selector_call,
    generic_selector,
    seq_cons,
    seq_drop,
)
from .natsets import selector_finite

STRATEGIES = ("pi", "fast", "berger", "lex")


class _TailCache:
    """Per-invocation map from a chosen head to the tail searched under it."""

    __slots__ = ("_by_value", "_by_id")

    def __init__(self):
        self._by_value: dict[Any, Any] = {}
        self._by_id: dict[int, tuple[Any, Any]] = {}

    def get(self, x: Any, make):
        try:
            hit = self._by_value.get(x)
        except TypeError:
            entry = self._by_id.get(id(x))
            if entry is None or entry[0] is not x:
                entry = self._by_id[id(x)] = (x, make())
            return entry[1]
        if hit is None:
            hit = self._by_value[x] = make()
        return hit


def pi_product(eps: Seq) -> Selector:
    """Selector for the product of the sets selected by ``eps[0], eps[1], ...``.

    Uses the head/tail form: the head is the ``x`` chosen by ``eps[0]`` for
    which the rest of the product, searched recursively, completes ``p``;
    the tail is that very recursive search.  Tails are cached per head value
    within one call, which is what keeps the search from re-running whole
    subtrees.
    """
    rest = Lazy(lambda: pi_product(seq_drop(eps, 1)))

    def select(p: Predicate) -> Seq:
        tails = _TailCache()

        def tail_for(x: Any) -> Seq:
            return tails.get(x, lambda: rest()(lambda a: p(seq_cons(x, a))))

        def compute_head() -> Any:
            count_selector_call()
            return eps[0](lambda x: p(seq_cons(x, tail_for(x))))

        head = Lazy(compute_head)
        return Seq(lambda i: head() if i == 0 else tail_for(head())[i - 1])

    return select


def berger_cantor() -> Selector:
    """Selector for Cantor space by case analysis on the 0-branch.

    Returns the lexicographically least solution when there is one.
    """

    def select(p: Predicate) -> Seq:
        zero_tail = Lazy(lambda: select(lambda a: p(seq_cons(0, a))))

        def decide() -> tuple[int, Seq]:
            count_selector_call()
            t0 = zero_tail()
            if p(seq_cons(0, t0)):
                return 0, t0
            return 1, select(lambda a: p(seq_cons(1, a)))

        step = Lazy(decide)
        return Seq(lambda i: step()[0] if i == 0 else step()[1][i - 1])

    return select


def lex_cantor() -> Selector:
    """Selector for Cantor space that never branches on the value of ``p``.

    Each digit is ``p`` itself applied to a candidate that starts with 1,
    so the lexicographically greatest solution comes out.
    """

    def select(p: Predicate) -> Seq:
        return generic_selector(1, lambda a: bit(p(a)))

    return select


# ---------------------------------------------------------------------------
# sequences as breadth-first binary trees


def tree_root(t: Seq) -> Any:
    return t[0]


def tree_left(t: Seq) -> Seq:
    return Seq(lambda i: t[2 * i + 1])


def tree_right(t: Seq) -> Seq:
    return Seq(lambda i: t[2 * i + 2])


def tree_branch(x: Any, l: Seq, r: Seq) -> Seq:
    def at(i: int) -> Any:
        if i == 0:
            return x
        if i % 2:
            return l[(i - 1) // 2]
        return r[(i - 2) // 2]

    return Seq(at)


def fast_pi_product(eps: Seq) -> Selector:
    """Product selector that splits the index set as a heap-ordered tree.

    The root factor is chosen first, then the left subtree product, then
    the right one, each by a recursive call on the corresponding half of
    ``eps``.  Index ``i`` sits at depth about ``log2(i)``.
    """
    eps_left = Lazy(lambda: fast_pi_product(tree_left(eps)))
    eps_right = Lazy(lambda: fast_pi_product(tree_right(eps)))

    def select(p: Predicate) -> Seq:
        lefts = _TailCache()
        rights: dict[tuple[Any, int], tuple[Seq, Seq]] = {}

        def right_choice(x: Any, l: Seq) -> Seq:
            try:
                key = (x, id(l))
                hit = rights.get(key)
            except TypeError:
                key = (id(x), id(l))
                hit = rights.get(key)
            if hit is None or hit[0] is not l:
                r = eps_right()(lambda r: p(tree_branch(x, l, r)))
                hit = rights[key] = (l, r)
            return hit[1]

        def exists_right(x: Any, l: Seq) -> int:
            return bit(p(tree_branch(x, l, right_choice(x, l))))

        def left_choice(x: Any) -> Seq:
            return lefts.get(x, lambda: eps_left()(lambda l: exists_right(x, l)))

        def compute_root() -> Any:
            count_selector_call()
            return eps[0](lambda x: exists_right(x, left_choice(x)))

        x0 = Lazy(compute_root)
        l0 = Lazy(lambda: left_choice(x0()))
        r0 = Lazy(lambda: right_choice(x0(), l0()))

        def at(i: int) -> Any:
            if i == 0:
                return x0()
            if i % 2:
                return l0()[(i - 1) // 2]
            return r0()[(i - 2) // 2]

        return Seq(at)

    return select


# ---------------------------------------------------------------------------
# standard factor families

_BIT_SELECTOR = selector_finite((0, 1))
_ZERO_SELECTOR = selector_finite((0,))


def cantor_selectors() -> Seq:
    return Seq.const(_BIT_SELECTOR)


def box_selectors(box: Sequence[Sequence[int]]) -> Seq:
    """Factor selectors for ``box[0] x box[1] x ... x {0} x {0} x ...``."""
    selectors = tuple(selector_finite(factor) for factor in box)
    n = len(selectors)
    return Seq(lambda i: selectors[i] if i < n else _ZERO_SELECTOR)


def product_selector(strategy: str, eps: Seq | None = None) -> Selector:
    """Look up a product selector by strategy name.

    ``berger`` and ``lex`` only search Cantor space and ignore ``eps``.
    """
    if strategy == "pi":
        return pi_product(cantor_selectors() if eps is None else eps)
    if strategy == "fast":
        return fast_pi_product(cantor_selectors() if eps is None else eps)
    if strategy == "berger":
        return berger_cantor()
    if strategy == "lex":
        return lex_cantor()
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
