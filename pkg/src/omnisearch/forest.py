"""Symbolic solution forests over n-branching trees.

Running the head/tail Cantor selector with trees as values and the node
constructor ``Q`` as predicate yields, for each coordinate, a tree built
from ``Q`` and the leaf ``1``.  Folding a tree with a concrete boolean
function ``q`` in place of ``Q`` gives that coordinate of the
lexicographically greatest solution of ``q = 1``.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .core import Seq, bit, generic_selector

MAX_ARITY = 4


class Leaf:
    """The leaf ``1``.  There is exactly one instance, :data:`LEAF`."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "1"


LEAF = Leaf()


class Node:
    """``Q(t1, ..., tn)``.  Children are read lazily from a sequence."""

    __slots__ = ("_source", "arity", "_children")

    def __init__(self, source: Seq, arity: int):
        self._source = source
        self.arity = arity
        self._children: tuple | None = None

    @property
    def children(self) -> tuple:
        if self._children is None:
            self._children = tuple(self._source[i] for i in range(self.arity))
            self._source = None
        return self._children

    def __repr__(self) -> str:
        return render_tree(self)


SymTree = Leaf | Node


class ArityError(ValueError):
    pass


def _check_arity(n: int) -> None:
    if not 1 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be between 1 and {MAX_ARITY}, got {n}")


def solution_forest(n: int) -> list:
    """The general solution of ``q(x0, ..., x_{n-1}) = 1`` as n trees.

    Subtrees that the construction shares are the same objects in the
    result; see :func:`render_let`.
    """
    _check_arity(n)
    forest = generic_selector(LEAF, lambda alpha: Node(alpha, n))
    return [forest[i] for i in range(n)]


def eval_tree(q: Callable[..., int], t, n: int | None = None) -> int:
    """Fold ``t`` with ``q`` for ``Q`` and 1 for leaves."""
    memo: dict[int, int] = {}

    def go(t) -> int:
        if t is LEAF:
            return 1
        key = id(t)
        if key not in memo:
            kids = t.children
            if n is not None and len(kids) != n:
                raise ArityError(f"node has {len(kids)} children, expected {n}")
            memo[key] = bit(q(*(go(c) for c in kids)))
        return memo[key]

    return go(t)


def solve_by_forest(q: Callable[..., int], n: int) -> tuple[int, ...] | None:
    """Lexicographically greatest solution of ``q = 1``, or None."""
    _check_arity(n)
    xs = tuple(eval_tree(q, t, n) for t in solution_forest(n))
    return xs if q(*xs) else None


# ---------------------------------------------------------------------------
# rendering


def render_tree(t, names: dict[int, str] | None = None) -> str:
    names = names or {}
    if t is LEAF:
        return "1"
    name = names.get(id(t))
    if name is not None:
        return name
    return "Q(" + ",".join(render_tree(c, names) for c in t.children) + ")"


def render_expanded(forest: list) -> str:
    """The forest with every shared subtree written out in full."""
    parts = [render_tree(t) for t in forest]
    if len(parts) == 1:
        return parts[0]
    return "(" + ", ".join(parts) + ")"


def _nodes(t) -> Iterator:
    if t is not LEAF:
        yield t
        for c in t.children:
            yield from _nodes(c)


def _aux_names() -> Iterator[str]:
    yield from ("y", "z", "u", "v", "w")
    k = 1
    while True:
        yield f"y{k}"
        k += 1


def render_let(forest: list) -> str:
    """The forest with shared subtrees bound to names.

    Coordinates are named ``x0, x1, ...``; any other node reached more than
    once is given an auxiliary name and bound before its first use.
    """
    top = {id(t): f"x{i}" for i, t in enumerate(forest) if t is not LEAF}
    refs: dict[int, int] = {}
    seen: set[int] = set()

    def count(t) -> None:
        if t is LEAF:
            return
        refs[id(t)] = refs.get(id(t), 0) + 1
        if id(t) in seen:
            return
        seen.add(id(t))
        for c in t.children:
            count(c)

    for t in forest:
        count(t)

    names = dict(top)
    fresh = _aux_names()
    bindings: list[tuple[str, object]] = []
    bound: set[int] = set()

    def bind(t) -> None:
        # children first so every name is defined before it is used
        if t is LEAF or id(t) in bound:
            return
        for c in t.children:
            bind(c)
        shared = refs.get(id(t), 0) > 1 or id(t) in top
        if shared:
            bound.add(id(t))
            if id(t) not in names:
                names[id(t)] = next(fresh)
            bindings.append((names[id(t)], t))

    for t in forest:
        bind(t)

    def body(t) -> str:
        return "Q(" + ",".join(render_tree(c, names) for c in t.children) + ")"

    lets = " ; ".join(f"{name} = {body(t)}" for name, t in bindings)
    result = [names.get(id(t), "1") for t in forest]
    tuple_text = result[0] if len(result) == 1 else "(" + ", ".join(result) + ")"
    return f"let {lets} in {tuple_text}" if lets else tuple_text
