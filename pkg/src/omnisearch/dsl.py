"""A small total expression language for predicates and functions on sequences.

Grammar, loosest binding first::

    expr := imp
    imp  := or ("=>" imp)?
    or   := and ("||" and)*
    and  := neg ("&&" neg)*
    neg  := "!" neg | cmp
    cmp  := sum (("==" | "!=" | "<=" | "<") sum)?
    sum  := prod (("+" | "-") prod)*
    prod := atom ("*" atom)*
    atom := nat | "a[" nat "]" | "(" expr ")"

``-`` is truncated subtraction.  Variable indices are literals, so the
number of coordinates an expression can read is known after parsing.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .core import NAT_MAX, NatOverflow, Seq, nat


class DslError(ValueError):
    pass


class DslSyntaxError(DslError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DslTypeError(DslError):
    pass


class BoxTooLarge(DslError):
    pass


# ---------------------------------------------------------------------------
# syntax


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Num | Var | Not | BinOp

ARITH = ("+", "-", "*")
COMPARE = ("==", "!=", "<=", "<")
LOGIC = ("&&", "||", "=>")

_PREC = {"=>": 1, "||": 2, "&&": 3, "!": 4, "==": 5, "!=": 5, "<=": 5, "<": 5,
         "+": 6, "-": 6, "*": 7}
_ATOM = 8

_TOKEN = re.compile(r"\s*(?:(\d+)|(a\[)|(=>|\|\||&&|==|!=|<=|[!<+\-*()\]]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("nat", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("var", "a[", start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def accept(self, *ops: str) -> str | None:
        kind, value, _ = self.tokens[self.i]
        if kind == "op" and value in ops:
            self.i += 1
            return value
        return None

    def expect(self, op: str) -> None:
        if self.accept(op) is None:
            kind, value, pos = self.peek()
            found = "end of input" if kind == "end" else repr(value)
            raise DslSyntaxError(f"expected {op!r}, found {found}", pos)

    def parse(self) -> Expr:
        e = self.imp()
        kind, value, pos = self.peek()
        if kind != "end":
            raise DslSyntaxError(f"unexpected {value!r}", pos)
        return e

    def imp(self) -> Expr:
        left = self.or_()
        if self.accept("=>"):
            return BinOp("=>", left, self.imp())
        return left

    def or_(self) -> Expr:
        e = self.and_()
        while self.accept("||"):
            e = BinOp("||", e, self.and_())
        return e

    def and_(self) -> Expr:
        e = self.neg()
        while self.accept("&&"):
            e = BinOp("&&", e, self.neg())
        return e

    def neg(self) -> Expr:
        if self.accept("!"):
            return Not(self.neg())
        return self.cmp()

    def cmp(self) -> Expr:
        left = self.sum()
        op = self.accept(*COMPARE)
        if op:
            return BinOp(op, left, self.sum())
        return left

    def sum(self) -> Expr:
        e = self.prod()
        while True:
            op = self.accept("+", "-")
            if op is None:
                return e
            e = BinOp(op, e, self.prod())

    def prod(self) -> Expr:
        e = self.atom()
        while self.accept("*"):
            e = BinOp("*", e, self.atom())
        return e

    def atom(self) -> Expr:
        kind, value, pos = self.peek()
        if kind == "nat":
            self.i += 1
            n = int(value)
            if n > NAT_MAX:
                raise NatOverflow(f"literal {value} at position {pos} exceeds {NAT_MAX}")
            return Num(n)
        if kind == "var":
            self.i += 1
            kind, value, pos = self.peek()
            if kind != "nat":
                raise DslSyntaxError("expected a literal index", pos)
            self.i += 1
            self.expect("]")
            return Var(int(value))
        if self.accept("("):
            e = self.imp()
            self.expect(")")
            return e
        found = "end of input" if kind == "end" else repr(value)
        raise DslSyntaxError(f"expected a number, a[i] or '(', found {found}", pos)


# ---------------------------------------------------------------------------
# kinds and typing


def kind_of(e: Expr) -> str:
    """``"bool"`` for comparisons and connectives, ``"nat"`` otherwise."""
    if isinstance(e, Not):
        return "bool"
    if isinstance(e, BinOp) and e.op not in ARITH:
        return "bool"
    return "nat"


def _check(e: Expr) -> None:
    if isinstance(e, Not):
        _check_bit_operand(e.operand, "!")
        _check(e.operand)
    elif isinstance(e, BinOp):
        if e.op in LOGIC:
            _check_bit_operand(e.left, e.op)
            _check_bit_operand(e.right, e.op)
        _check(e.left)
        _check(e.right)


def _check_bit_operand(e: Expr, op: str) -> None:
    # variables are checked when read; their values depend on the space
    if kind_of(e) == "bool" or isinstance(e, Var):
        return
    if isinstance(e, Num) and e.value in (0, 1):
        return
    raise DslTypeError(f"operand of {op!r} is not a bit: {to_text(e)}")


def max_index(e: Expr) -> int:
    if isinstance(e, Var):
        return e.index
    if isinstance(e, Not):
        return max_index(e.operand)
    if isinstance(e, BinOp):
        return max(max_index(e.left), max_index(e.right))
    return -1


# ---------------------------------------------------------------------------
# evaluation


def _bit_var(i: int) -> Callable[[Seq], int]:
    def read(a: Seq) -> int:
        v = a[i]
        if v != 0 and v != 1:
            raise DslTypeError(f"a[{i}] = {v} used as a bit")
        return v

    return read


def _compile_bit(e: Expr) -> Callable[[Seq], int]:
    if isinstance(e, Var):
        return _bit_var(e.index)
    return _compile(e)


def _compile(e: Expr) -> Callable[[Seq], int]:
    if isinstance(e, Num):
        v = e.value
        return lambda a: v
    if isinstance(e, Var):
        i = e.index
        return lambda a: a[i]
    if isinstance(e, Not):
        f = _compile_bit(e.operand)
        return lambda a: 1 - f(a)
    op = e.op
    if op in LOGIC:
        f, g = _compile_bit(e.left), _compile_bit(e.right)
        if op == "&&":
            return lambda a: g(a) if f(a) else 0
        if op == "||":
            return lambda a: 1 if f(a) else g(a)
        return lambda a: g(a) if f(a) else 1
    f, g = _compile(e.left), _compile(e.right)
    if op == "+":
        return lambda a: nat(f(a) + g(a))
    if op == "*":
        return lambda a: nat(f(a) * g(a))
    if op == "-":
        return lambda a: max(f(a) - g(a), 0)
    if op == "==":
        return lambda a: 1 if f(a) == g(a) else 0
    if op == "!=":
        return lambda a: 1 if f(a) != g(a) else 0
    if op == "<=":
        return lambda a: 1 if f(a) <= g(a) else 0
    return lambda a: 1 if f(a) < g(a) else 0


@dataclass(frozen=True)
class ParsedPredicate:
    """A parsed expression together with its syntactic modulus.

    Calling it on a sequence evaluates the expression; it never reads an
    index at or beyond ``modulus_bound``.
    """

    expr: Expr
    modulus_bound: int
    text: str = ""
    _fn: Callable[[Seq], int] = field(default=None, repr=False, compare=False)

    def __call__(self, alpha: Seq) -> int:
        return self._fn(alpha)

    @property
    def kind(self) -> str:
        return kind_of(self.expr)


def from_expr(expr: Expr, text: str | None = None) -> ParsedPredicate:
    _check(expr)
    return ParsedPredicate(expr, max_index(expr) + 1,
                           to_text(expr) if text is None else text, _compile(expr))


def parse(text: str) -> ParsedPredicate:
    return from_expr(_Parser(text).parse(), text)


def parse_function(text: str) -> ParsedPredicate:
    """Parse a natural-valued expression (no comparisons or connectives at the top)."""
    p = parse(text)
    if p.kind != "nat":
        raise DslTypeError(f"expected a natural-valued expression, got a {p.kind} one")
    return p


def eval_pred(p: ParsedPredicate, alpha: Seq) -> int:
    v = p(alpha)
    if v != 0 and v != 1:
        raise DslTypeError(f"predicate {p.text!r} evaluated to {v}, not a bit")
    return v


def as_predicate(p: ParsedPredicate) -> Callable[[Seq], int]:
    """``p`` as a bit-valued predicate; non-bit results raise :class:`DslTypeError`."""
    return lambda alpha: eval_pred(p, alpha)


# ---------------------------------------------------------------------------
# printing


def to_text(e: Expr) -> str:
    return _show(e, 0)


def _show(e: Expr, ctx: int) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return f"a[{e.index}]"
    if isinstance(e, Not):
        text, prec = "!" + _show(e.operand, _PREC["!"]), _PREC["!"]
    else:
        prec = _PREC[e.op]
        if e.op == "=>":
            lp, rp = prec + 1, prec
        elif e.op in COMPARE:
            lp = rp = prec + 1
        else:
            lp, rp = prec, prec + 1
        text = f"{_show(e.left, lp)} {e.op} {_show(e.right, rp)}"
    return f"({text})" if prec < ctx else text


# ---------------------------------------------------------------------------
# brute-force oracle

MAX_BOX = 2**24


def _box_prefix(p: ParsedPredicate, box: Sequence[Sequence[int]]):
    m = p.modulus_bound
    if len(box) < m:
        raise ValueError(f"box has {len(box)} factors but the predicate reads {m}")
    factors = [sorted(set(f)) for f in box]
    if any(not f for f in factors):
        raise ValueError("box factors must be nonempty")
    size = math.prod(len(f) for f in factors[:m])
    if size > MAX_BOX:
        raise BoxTooLarge(f"box prefix has {size} points, limit is {MAX_BOX}")
    tail = tuple(f[0] for f in factors[m:])
    return factors[:m], tail


def brute_force_solutions(p: ParsedPredicate,
                          box: Sequence[Sequence[int]]) -> Iterator[tuple[int, ...]]:
    """All witness prefixes of length ``modulus_bound``, lexicographically ascending.

    Coordinates past the prefix are fixed to the least element of their
    factor (0 past the end of the box).
    """
    factors, tail = _box_prefix(p, box)
    for prefix in itertools.product(*factors):
        if eval_pred(p, Seq.from_prefix(prefix + tail)):
            yield prefix


def brute_force_exists(p: ParsedPredicate,
                       box: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    return next(brute_force_solutions(p, box), None)


def cantor_box(n: int) -> list[list[int]]:
    return [[0, 1] for _ in range(n)]


# ---------------------------------------------------------------------------
# random corpus


def random_nat_expr(rng: random.Random, modulus: int, depth: int = 3,
                    max_literal: int = 3) -> Expr:
    """A random natural-valued expression reading indices below ``modulus``."""
    if depth <= 0 or rng.random() < 0.3:
        if modulus > 0 and rng.random() < 0.75:
            return Var(rng.randrange(modulus))
        return Num(rng.randint(0, max_literal))
    op = rng.choice(ARITH)
    return BinOp(op, random_nat_expr(rng, modulus, depth - 1, max_literal),
                 random_nat_expr(rng, modulus, depth - 1, max_literal))


def random_bool_expr(rng: random.Random, modulus: int, depth: int = 3,
                     max_literal: int = 3) -> Expr:
    """A random predicate over indices below ``modulus``, total on any box."""
    if depth <= 0 or rng.random() < 0.35:
        op = rng.choice(COMPARE)
        left = random_nat_expr(rng, modulus, 1, max_literal)
        right = random_nat_expr(rng, modulus, 1, max_literal)
        return BinOp(op, left, right)
    r = rng.random()
    if r < 0.15:
        return Not(random_bool_expr(rng, modulus, depth - 1, max_literal))
    op = rng.choice(LOGIC)
    return BinOp(op, random_bool_expr(rng, modulus, depth - 1, max_literal),
                 random_bool_expr(rng, modulus, depth - 1, max_literal))


def random_predicate(rng: random.Random, modulus: int, depth: int = 3,
                     max_literal: int = 3) -> ParsedPredicate:
    return from_expr(random_bool_expr(rng, modulus, depth, max_literal))


def random_function(rng: random.Random, modulus: int, depth: int = 3,
                    max_literal: int = 3) -> ParsedPredicate:
    return from_expr(random_nat_expr(rng, modulus, depth, max_literal))
