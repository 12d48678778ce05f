"""Moduli of uniform continuity and equality of functions on product spaces."""

from __future__ import annotations

from typing import Any, Callable

from .combinators import PairPoint, product_pair
from .core import (
    Seq,
    bit,
    forall_from_selector,
    mu,
    seq_drop,
    seq_prefix_eq,
)
from .product import pi_product

SeqFunction = Callable[[Seq], Any]


def _uniform_at_pairs(eps: Seq, f: SeqFunction, product) -> Callable[[int], int]:
    forall_pairs = forall_from_selector(product_pair(product(eps), product(eps)))

    def uniform_at(n: int) -> int:
        def agree(pair: PairPoint) -> int:
            a, b = pair
            return bit(not seq_prefix_eq(a, b, n) or f(a) == f(b))

        return forall_pairs(agree)

    return uniform_at


def _uniform_at_reference(eps: Seq, f: SeqFunction, product) -> Callable[[int], int]:
    forall = forall_from_selector(product(eps))

    def uniform_at(n: int) -> int:
        # f is n-uniform iff f(a) equals f at a's n-prefix followed by one fixed
        # tail from the remaining factors
        tail = product(seq_drop(eps, n))(lambda _: 1)

        def completed(a: Seq) -> Seq:
            return Seq(lambda i: a[i] if i < n else tail[i - n])

        return forall(lambda a: f(a) == f(completed(a)))

    return uniform_at


def fan_modulus(eps: Seq, f: SeqFunction, product=pi_product,
                method: str = "reference") -> int:
    """Least ``n`` such that agreeing on ``n`` coordinates forces equal values of ``f``.

    ``method="pairs"`` decides each step by searching the square of the
    space for two points that agree on ``n`` coordinates but not on ``f``.
    That costs a full inner search per outer candidate.  The default
    compares every point with its own ``n``-prefix completed by one fixed
    member of the remaining factors, which decides the same statement with
    a single search per step.

    ``f`` must be total on the product, otherwise this diverges.
    """
    if method == "pairs":
        uniform_at = _uniform_at_pairs(eps, f, product)
    elif method == "reference":
        uniform_at = _uniform_at_reference(eps, f, product)
    else:
        raise ValueError(f"unknown method {method!r}")
    return mu(uniform_at)


def fn_equal(eps: Seq, f: SeqFunction, g: SeqFunction, product=pi_product) -> int:
    """1 iff ``f`` and ``g`` agree everywhere on the product."""
    return forall_from_selector(product(eps))(lambda a: f(a) == g(a))
