"""Lazy sequences, predicates, selectors and quantifiers.

A *selector* for a set K is any callable taking a predicate and returning a
member of K that satisfies the predicate whenever some member does.  A
*quantifier* takes a predicate and returns a bit.  Both are plain callables;
nothing here checks that a selector is honest about its set.

Partiality is modelled by nontermination.  Long-running searches can be
bounded with :func:`fuel`, which raises :class:`FuelExhausted` once the step
budget is spent.
"""

from __future__ import annotations

import contextlib
import contextvars
import sys
import threading
from typing import Any, Callable, Iterable, Iterator, TypeVar

V = TypeVar("V")
P = TypeVar("P")

Predicate = Callable[[Any], Any]
Selector = Callable[[Predicate], Any]
Quantifier = Callable[[Predicate], int]

NAT_MAX = 2**64 - 1


class SearchError(Exception):
    """Base class for errors raised by the search machinery."""


class FuelExhausted(SearchError):
    """The step budget of the enclosing :func:`fuel` block ran out."""


class NatOverflow(SearchError, ArithmeticError):
    """A natural number left the machine-word range."""


def nat(value: int) -> int:
    if value < 0 or value > NAT_MAX:
        raise NatOverflow(f"{value} is outside 0..{NAT_MAX}")
    return value


def bit(value: Any) -> int:
    """Normalise a truth value to 0 or 1."""
    return 1 if value else 0


# ---------------------------------------------------------------------------
# step budget and instrumentation


class Budget:
    """Step counter shared by everything evaluated inside one ``fuel`` block."""

    __slots__ = ("limit", "steps", "selector_calls")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit <= 0:
            raise ValueError("fuel must be positive")
        self.limit = limit
        self.steps = 0
        self.selector_calls = 0


_budget: contextvars.ContextVar[Budget | None] = contextvars.ContextVar(
    "omnisearch_budget", default=None
)


@contextlib.contextmanager
def fuel(limit: int | None = None) -> Iterator[Budget]:
    """Run the body under a fresh step budget.

    ``limit=None`` only counts; it never raises.
    """
    budget = Budget(limit)
    token = _budget.set(budget)
    try:
        yield budget
    finally:
        _budget.reset(token)


def tick(n: int = 1) -> None:
    budget = _budget.get()
    if budget is not None:
        budget.steps += n
        if budget.limit is not None and budget.steps > budget.limit:
            raise FuelExhausted(f"step budget of {budget.limit} exhausted")


def count_selector_call() -> None:
    budget = _budget.get()
    if budget is not None:
        budget.selector_calls += 1
    tick()


def run_deep(fn: Callable[..., V], *args: Any, stack_mb: int = 512,
             recursion_limit: int = 200_000, **kwargs: Any) -> V:
    """Call ``fn`` on a worker thread with a large C stack.

    Lazy searches recurse once per observed coordinate and the nesting gets
    deep quickly; the main thread's stack is too small for that on CPython.
    The caller's context (including any active budget) is carried over.
    """
    ctx = contextvars.copy_context()
    result: list[Any] = []
    error: list[BaseException] = []

    def target() -> None:
        try:
            result.append(ctx.run(fn, *args, **kwargs))
        except BaseException as exc:  # re-raised on the calling thread
            error.append(exc)

    old_limit = sys.getrecursionlimit()
    old_size = threading.stack_size()
    sys.setrecursionlimit(max(old_limit, recursion_limit))
    threading.stack_size(stack_mb * 1024 * 1024)
    try:
        worker = threading.Thread(target=target, name="omnisearch-deep")
        worker.start()
    finally:
        threading.stack_size(old_size)
    worker.join()
    sys.setrecursionlimit(old_limit)
    if error:
        raise error[0]
    return result[0]


# ---------------------------------------------------------------------------
# sequences


class Seq:
    """An infinite sequence whose elements are computed on first read.

    Elements are memoised, so a sequence is referentially transparent as
    long as ``at`` is.  ``seq[i]`` and ``seq(i)`` both read index ``i``.
    """

    __slots__ = ("_at", "_memo")

    def __init__(self, at: Callable[[int], Any]):
        self._at = at
        self._memo: dict[int, Any] = {}

    def __getitem__(self, i: int) -> Any:
        memo = self._memo
        if i in memo:
            return memo[i]
        if i < 0:
            raise IndexError("sequence index must be nonnegative")
        tick()
        value = memo[i] = self._at(i)
        return value

    __call__ = __getitem__

    def take(self, n: int) -> list:
        return [self[i] for i in range(n)]

    def forced(self) -> dict[int, Any]:
        """Indices read so far, with their values."""
        return dict(self._memo)

    def __iter__(self) -> Iterator[Any]:
        i = 0
        while True:
            yield self[i]
            i += 1

    def __repr__(self) -> str:
        shown = []
        i = 0
        while i in self._memo and i < 8:
            shown.append(repr(self._memo[i]))
            i += 1
        return f"Seq({', '.join(shown)}, ...)"

    @classmethod
    def const(cls, x: Any) -> "Seq":
        return cls(lambda i: x)

    @classmethod
    def from_prefix(cls, prefix: Iterable[Any], default: Any = 0) -> "Seq":
        """The finite ``prefix`` followed by ``default`` forever."""
        items = tuple(prefix)
        n = len(items)
        return cls(lambda i: items[i] if i < n else default)

    @classmethod
    def of(cls, fn: Callable[[int], Any]) -> "Seq":
        return cls(fn)


class _Prefixed(Seq):
    """A finite tuple of known values in front of another sequence.

    Searches cons one digit per level onto the point they test; keeping the
    digits in one tuple makes every read O(1) instead of O(depth).
    """

    __slots__ = ("prefix", "base")

    def __init__(self, prefix: tuple, base: Seq):
        self.prefix = prefix
        self.base = base

    def __getitem__(self, i: int) -> Any:
        n = len(self.prefix)
        if i < n:
            if i < 0:
                raise IndexError("sequence index must be nonnegative")
            return self.prefix[i]
        return self.base[i - n]

    __call__ = __getitem__

    def forced(self) -> dict[int, Any]:
        n = len(self.prefix)
        seen = dict(enumerate(self.prefix))
        seen.update((i + n, v) for i, v in self.base.forced().items())
        return seen

    def __repr__(self) -> str:
        return f"{list(self.prefix)} ++ {self.base!r}"


def seq_cons(x: Any, alpha: Seq) -> Seq:
    if isinstance(alpha, _Prefixed):
        return _Prefixed((x,) + alpha.prefix, alpha.base)
    return _Prefixed((x,), alpha)


def seq_drop(alpha: Seq, k: int) -> Seq:
    if k == 0:
        return alpha
    return Seq(lambda i: alpha[k + i])


def seq_prefix_eq(alpha: Seq, beta: Seq, n: int) -> int:
    """1 iff the first ``n`` elements agree."""
    for i in range(n):
        if alpha[i] != beta[i]:
            return 0
    return 1


def seq_splice(prefix: Seq, n: int, x: Any, tail: Seq) -> Seq:
    """``prefix`` below ``n``, then ``x`` at ``n``, then ``tail``."""

    def at(i: int) -> Any:
        if i < n:
            return prefix[i]
        if i == n:
            return x
        return tail[i - n - 1]

    return Seq(at)


class Lazy:
    """A memoised thunk."""

    __slots__ = ("_fn", "_done", "_value")

    def __init__(self, fn: Callable[[], Any]):
        self._fn = fn
        self._done = False
        self._value = None

    def __call__(self) -> Any:
        if not self._done:
            self._value = self._fn()
            self._done = True
            self._fn = None
        return self._value


# ---------------------------------------------------------------------------
# quantifiers


def exists_from_selector(eps: Selector) -> Quantifier:
    """The existential quantifier ``p -> p(eps(p))``."""

    def exists(p: Predicate) -> int:
        return bit(p(eps(p)))

    return exists


def forall_from_exists(ex: Quantifier) -> Quantifier:
    def forall(p: Predicate) -> int:
        return 1 - bit(ex(lambda x: 1 - bit(p(x))))

    return forall


def exists_from_forall(fa: Quantifier) -> Quantifier:
    def exists(p: Predicate) -> int:
        return 1 - bit(fa(lambda x: 1 - bit(p(x))))

    return exists


def forall_from_selector(eps: Selector) -> Quantifier:
    return forall_from_exists(exists_from_selector(eps))


def mu(p: Callable[[int], Any], start: int = 0) -> int:
    """Least ``n >= start`` with ``p(n)``; diverges if there is none."""
    n = start
    while True:
        tick()
        if p(n):
            return n
        n = nat(n + 1)


# ---------------------------------------------------------------------------
# head/tail selector over an arbitrary value domain


def generic_selector(one: Any, p: Callable[[Seq], Any]) -> Seq:
    """The sequence ``d(p) = x0 * d(p_x0)`` where ``x0 = p(one * d(p_one))``.

    ``p`` maps sequences to values of the same domain as ``one``.  With bits
    and ``one = 1`` this selects the lexicographically greatest solution of a
    predicate on Cantor space; with symbolic trees and ``p`` a node
    constructor it produces the general solution forest.

    The tail for ``x0 == one`` is the very sequence built while computing
    ``x0``, so each level is evaluated once along that branch.
    """
    tails: dict[int, tuple[Any, Seq]] = {}

    def tail_for(x: Any) -> Seq:
        key = id(x)
        hit = tails.get(key)
        if hit is None or hit[0] is not x:
            hit = tails[key] = (x, generic_selector(one, lambda a: p(seq_cons(x, a))))
        return hit[1]

    def compute_head() -> Any:
        count_selector_call()
        return p(seq_cons(one, tail_for(one)))

    head = Lazy(compute_head)

    def tail() -> Seq:
        x0 = head()
        if x0 is not one and x0 == one:
            x0 = one
        return tail_for(x0)

    return Seq(lambda i: head() if i == 0 else tail()[i - 1])
