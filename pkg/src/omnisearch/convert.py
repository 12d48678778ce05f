"""From an existential quantifier on a set of sequences of naturals to a
member, a selector, a retraction onto the set, and a semi-decision of
non-membership.

The set is assumed to be nonempty, closed, and finitely branching (every
prefix has finitely many one-step extensions within it).  None of that is
checked; violations show up as nontermination.
"""

from __future__ import annotations

import enum
from typing import Callable

from .core import Predicate, Quantifier, Selector, Seq, bit, mu, seq_prefix_eq


class Verdict(enum.Enum):
    OUTSIDE_K = "OutsideK"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


def _course_of_values(step: Callable[[Seq, int], int]) -> Seq:
    """Sequence whose element ``n`` is ``step(self, n)``, filled in index order."""
    values: list[int] = []

    def at(i: int) -> int:
        while len(values) <= i:
            values.append(step(seq, len(values)))
        return values[i]

    seq = Seq(at)
    return seq


def find_member(ex: Quantifier) -> Seq:
    """Some member of K: at each index take the least digit that still extends into K."""

    def step(alpha: Seq, n: int) -> int:
        return mu(lambda k: ex(lambda beta: seq_prefix_eq(alpha, beta, n) and beta[n] == k))

    return _course_of_values(step)


def restrict(ex: Quantifier, p: Predicate) -> Quantifier:
    """Existential quantifier for K intersected with the solutions of ``p``."""
    # q first: in find_member it is the prefix test, which prunes the search
    return lambda q: ex(lambda alpha: bit(q(alpha) and p(alpha)))


def selector_from_quantifier_baire(ex: Quantifier) -> Selector:
    def select(p: Predicate) -> Seq:
        if ex(p):
            return find_member(restrict(ex, p))
        return find_member(ex)

    return select


def retraction(ex: Quantifier) -> Callable[[Seq], Seq]:
    """Map any sequence onto K, fixing members of K.

    Follows ``alpha`` while its prefixes stay extendable in K; from the first
    digit that leaves K on, the least extendable digit is used instead.
    """

    def r(alpha: Seq) -> Seq:
        def step(image: Seq, n: int) -> int:
            def extends_with(m: int) -> int:
                return ex(lambda beta: seq_prefix_eq(beta, image, n) and beta[n] == m)

            if extends_with(alpha[n]):
                return alpha[n]
            return mu(extends_with)

        return _course_of_values(step)

    return r


def not_member(ex: Quantifier, alpha: Seq, depth: int) -> Verdict:
    """``OUTSIDE_K`` if the retraction moves ``alpha`` below ``depth``, else ``UNKNOWN``."""
    image = retraction(ex)(alpha)
    for i in range(depth):
        if image[i] != alpha[i]:
            return Verdict.OUTSIDE_K
    return Verdict.UNKNOWN
