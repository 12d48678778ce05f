"""Benchmark suites comparing the Cantor-space search strategies."""

from __future__ import annotations

import time
from typing import Iterable

from .convert import not_member
from .core import FuelExhausted, Seq, exists_from_selector, forall_from_selector, fuel
from .dsl import parse, parse_function
from .product import STRATEGIES, cantor_selectors, product_selector

SUITES = ("modulus-sweep", "equality", "membership")

EQUALITY_PAIRS = (
    ("a[0] + a[1]", "a[1] + a[0]"),
    ("a[0] * a[3] + a[2]", "a[2] + a[3] * a[0]"),
    ("a[5] - a[2]", "a[5] - a[2]"),
    ("(a[1] + a[4]) * a[7]", "a[1] * a[7] + a[4] * a[7]"),
    ("a[0] * a[9] + a[9]", "a[9] * (a[0] + 1)"),
)

# digits 0..11 of a Cantor point, with one out-of-range digit each
CORRUPTED_POINTS = (
    (0, 1, 5, 1, 0, 0),
    (2, 0, 0, 0),
    (1, 1, 1, 1, 1, 1, 1, 0, 3),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 7),
)


def _timed(fn, fuel_limit: int) -> tuple[dict, object]:
    start = time.perf_counter()
    with fuel(fuel_limit) as budget:
        try:
            value, status = fn(), "ok"
        except FuelExhausted:
            value, status = None, "fuel"
    row = {
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        "selector_calls": budget.selector_calls,
        "steps": budget.steps,
        "status": status,
    }
    return row, value


def modulus_sweep(moduli: Iterable[int], fuel_limit: int,
                  strategies: Iterable[str] = STRATEGIES) -> list[dict]:
    rows = []
    for m in moduli:
        p = parse(f"a[{m - 1}] == 1")
        for strategy in strategies:
            select = product_selector(strategy, cantor_selectors())
            row, verdict = _timed(lambda: p(select(p)), fuel_limit)
            rows.append({"predicate": p.text, "strategy": strategy, "modulus": m,
                         **row, "verdict": None if verdict is None else bool(verdict)})
    return rows


def equality(fuel_limit: int, strategies: Iterable[str] = STRATEGIES) -> list[dict]:
    rows = []
    for f_text, g_text in EQUALITY_PAIRS:
        f, g = parse_function(f_text), parse_function(g_text)
        modulus = max(f.modulus_bound, g.modulus_bound)
        for strategy in strategies:
            forall = forall_from_selector(product_selector(strategy, cantor_selectors()))
            row, verdict = _timed(lambda: forall(lambda a: f(a) == g(a)), fuel_limit)
            rows.append({"predicate": f"{f_text} == {g_text}", "strategy": strategy,
                         "modulus": modulus, **row,
                         "verdict": None if verdict is None else bool(verdict)})
    return rows


def membership(fuel_limit: int, depth: int = 16,
               strategies: Iterable[str] = STRATEGIES) -> list[dict]:
    rows = []
    for point in CORRUPTED_POINTS:
        alpha = Seq.from_prefix(point)
        for strategy in strategies:
            ex = exists_from_selector(product_selector(strategy, cantor_selectors()))
            row, verdict = _timed(lambda: not_member(ex, alpha, depth), fuel_limit)
            rows.append({"predicate": "point " + ",".join(map(str, point)),
                         "strategy": strategy, "modulus": depth, **row,
                         "verdict": None if verdict is None else str(verdict)})
    return rows


def run_suite(suite: str, fuel_limit: int, moduli: Iterable[int] = range(4, 17),
              strategies: Iterable[str] = STRATEGIES) -> list[dict]:
    if suite == "modulus-sweep":
        return modulus_sweep(moduli, fuel_limit, strategies)
    if suite == "equality":
        return equality(fuel_limit, strategies)
    if suite == "membership":
        return membership(fuel_limit, strategies=strategies)
    raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
