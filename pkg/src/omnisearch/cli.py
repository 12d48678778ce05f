"""Command-line front end.

Every command runs under a step budget (``--fuel``, default from the
``OMNISEARCH_FUEL`` environment variable, else 50 million).  One step is one
freshly computed sequence element, one candidate tried by a finite
selector, or one iteration of a least-number search, so budgets are
deterministic.

Exit codes: 0 success, 2 parse or usage error, 3 fuel exhausted,
4 natural-number overflow.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import bench
from .convert import not_member, retraction
from .core import (
    FuelExhausted,
    NatOverflow,
    Seq,
    exists_from_selector,
    forall_from_selector,
    fuel,
    run_deep,
)
from .dsl import DslError, as_predicate, parse, parse_function
from .fan import fan_modulus, fn_equal
from .forest import ArityError, render_expanded, render_let, solution_forest
from .natsets import selector_ninf
from .product import STRATEGIES, box_selectors, cantor_selectors, product_selector

DEFAULT_FUEL = 50_000_000

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FUEL = 3
EXIT_OVERFLOW = 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Space:
    kind: str  # "cantor", "ninf" or "box"
    box: tuple[tuple[int, ...], ...] = ()

    def factors(self) -> Seq | None:
        if self.kind == "cantor":
            return cantor_selectors()
        if self.kind == "box":
            return box_selectors(self.box)
        return None


@dataclass(frozen=True)
class RunConfig:
    fuel: int
    space: Space
    strategy: str
    output: str = "text"

    def selector(self):
        if self.space.kind == "ninf":
            return selector_ninf()
        if self.space.kind == "box" and self.strategy not in ("pi", "fast"):
            raise UsageError(f"strategy {self.strategy!r} only searches Cantor space")
        return product_selector(self.strategy, self.space.factors())

    def product(self):
        if self.space.kind == "ninf":
            raise UsageError("this command needs a product space (cantor or box)")
        if self.strategy == "pi" or self.strategy == "fast":
            return lambda eps: product_selector(self.strategy, eps)
        if self.space.kind != "cantor":
            raise UsageError(f"strategy {self.strategy!r} only searches Cantor space")
        fixed = product_selector(self.strategy)
        return lambda eps: fixed


def parse_factor(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(v) for v in text.split("|"))
    except ValueError:
        raise UsageError(f"bad box factor {text!r}") from None
    if not values or min(values) < 0:
        raise UsageError(f"box factor {text!r} must be a nonempty set of naturals")
    return values


def parse_space(words: Sequence[str]) -> Space:
    """``cantor``, ``ninf``, or ``box F0,F1,...`` with factors ``lo..hi`` or ``a|b|c``."""
    if not words:
        return Space("cantor")
    head = words[0]
    if head in ("cantor", "ninf") and len(words) == 1:
        return Space(head)
    if head == "box" or head.startswith("box:"):
        listing = ",".join([head[4:]] if head.startswith("box:") else [])
        listing = ",".join(filter(None, [listing, *words[1:]]))
        factors = tuple(parse_factor(f) for f in listing.split(",") if f.strip())
        if not factors:
            raise UsageError("box needs at least one factor")
        return Space("box", factors)
    raise UsageError(f"unknown space {' '.join(words)!r}")


def _default_fuel() -> int:
    raw = os.environ.get("OMNISEARCH_FUEL")
    if raw is None:
        return DEFAULT_FUEL
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"OMNISEARCH_FUEL must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# commands; each returns a JSON-ready report


def cmd_search(pred: str, cfg: RunConfig) -> dict:
    p = parse(pred)
    check = as_predicate(p)
    select = cfg.selector()
    witness = select(check)
    value = check(witness)
    return {"witness": [witness[i] for i in range(p.modulus_bound)],
            "solved": bool(value), "strategy": cfg.strategy}


def cmd_forall(pred: str, cfg: RunConfig) -> dict:
    check = as_predicate(parse(pred))
    return {"result": bool(forall_from_selector(cfg.selector())(check)),
            "strategy": cfg.strategy}


def cmd_exists(pred: str, cfg: RunConfig) -> dict:
    check = as_predicate(parse(pred))
    return {"result": bool(exists_from_selector(cfg.selector())(check)),
            "strategy": cfg.strategy}


def cmd_fan(fn_expr: str, cfg: RunConfig) -> dict:
    f = parse_function(fn_expr)
    product = cfg.product()
    return {"modulus": fan_modulus(cfg.space.factors(), f, product=product),
            "strategy": cfg.strategy}


def cmd_eq(f_expr: str, g_expr: str, cfg: RunConfig) -> dict:
    f, g = parse_function(f_expr), parse_function(g_expr)
    if cfg.space.kind == "ninf":
        equal = forall_from_selector(selector_ninf())(lambda a: f(a) == g(a))
    else:
        equal = fn_equal(cfg.space.factors(), f, g, product=cfg.product())
    return {"equal": bool(equal), "strategy": cfg.strategy}


def cmd_member(point_prefix: Sequence[int], depth: int, cfg: RunConfig) -> dict:
    """Retract the point ``prefix`` followed by zeros onto the space."""
    alpha = Seq.from_prefix(point_prefix)
    ex = exists_from_selector(cfg.selector())
    verdict = not_member(ex, alpha, depth)
    image = retraction(ex)(alpha)
    return {"verdict": str(verdict), "depth": depth,
            "retraction": [image[i] for i in range(depth)], "strategy": cfg.strategy}


def cmd_forest(n: int, render: str) -> dict:
    forest = solution_forest(n)
    text = render_expanded(forest) if render == "expanded" else render_let(forest)
    return {"n": n, "render": render, "forest": text}


def cmd_bench(suite: str, cfg: RunConfig, moduli: Sequence[int]) -> dict:
    rows = bench.run_suite(suite, cfg.fuel, moduli=moduli)
    return {"suite": suite, "rows": rows}


# ---------------------------------------------------------------------------
# text rendering


def _bool(v: bool) -> str:
    return "true" if v else "false"


def render_text(command: str, report: dict) -> str:
    if command == "search":
        return "\n".join([
            "witness: " + ",".join(map(str, report["witness"])),
            "verdict: " + str(int(report["solved"])),
            "solved: " + _bool(report["solved"]),
        ])
    if command in ("forall", "exists"):
        return _bool(report["result"])
    if command == "fan":
        return str(report["modulus"])
    if command == "eq":
        return _bool(report["equal"])
    if command == "member":
        return "\n".join([report["verdict"],
                          "retraction: " + ",".join(map(str, report["retraction"]))])
    if command == "forest":
        return report["forest"]
    if command == "bench":
        cols = ("predicate", "strategy", "modulus", "elapsed_ms", "selector_calls",
                "status", "verdict")
        lines = ["\t".join(cols)]
        lines += ["\t".join(str(row.get(c)) for c in cols) for row in report["rows"]]
        return "\n".join(lines)
    raise ValueError(command)


# ---------------------------------------------------------------------------
# argument handling


def _range_arg(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", nargs="+", default=["cantor"],
                        help="cantor | ninf | box F0,F1,... (factors lo..hi or a|b|c)")
    common.add_argument("--strategy", choices=STRATEGIES, default="pi")
    common.add_argument("--fuel", type=int, default=None,
                        help="step budget (default: $OMNISEARCH_FUEL or %d)" % DEFAULT_FUEL)
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = argparse.ArgumentParser(prog="omnisearch",
                                     description="Exhaustive search over infinite spaces.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (("search", "find a witness for a predicate"),
                        ("forall", "decide a universal statement"),
                        ("exists", "decide an existential statement")):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("pred")
    sp = sub.add_parser("fan", parents=[common], help="modulus of uniform continuity")
    sp.add_argument("fn_expr")
    sp = sub.add_parser("eq", parents=[common], help="decide equality of two functions")
    sp.add_argument("f")
    sp.add_argument("g")
    sp = sub.add_parser("member", parents=[common],
                        help="semi-decide non-membership of prefix+0^omega")
    sp.add_argument("point", help="comma-separated digits, continued by zeros")
    sp.add_argument("--depth", type=int, default=16)
    sp = sub.add_parser("forest", parents=[common], help="print the solution forest")
    sp.add_argument("n", type=int)
    sp.add_argument("--render", choices=("expanded", "let"), default="expanded")
    sp = sub.add_parser("bench", parents=[common], help="run a benchmark suite")
    sp.add_argument("suite", choices=bench.SUITES)
    sp.add_argument("--moduli", type=_range_arg, default=list(range(4, 17)),
                    help="e.g. 4..16 or 4,8,12")
    return parser


def _dispatch(args: argparse.Namespace, cfg: RunConfig) -> dict:
    c = args.command
    if c == "search":
        return cmd_search(args.pred, cfg)
    if c == "forall":
        return cmd_forall(args.pred, cfg)
    if c == "exists":
        return cmd_exists(args.pred, cfg)
    if c == "fan":
        return cmd_fan(args.fn_expr, cfg)
    if c == "eq":
        return cmd_eq(args.f, args.g, cfg)
    if c == "member":
        try:
            point = [int(v) for v in args.point.split(",") if v.strip()]
        except ValueError:
            raise UsageError(f"bad point {args.point!r}") from None
        if args.depth < 0:
            raise UsageError("depth must be nonnegative")
        return cmd_member(point, args.depth, cfg)
    if c == "forest":
        return cmd_forest(args.n, args.render)
    return cmd_bench(args.suite, cfg, args.moduli)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        limit = args.fuel if args.fuel is not None else _default_fuel()
        if limit <= 0:
            raise UsageError("fuel must be positive")
        cfg = RunConfig(limit, parse_space(args.space), args.strategy,
                        "json" if args.json else "text")
    except UsageError as exc:
        print(f"omnisearch: {exc}", file=err)
        return EXIT_USAGE

    def evaluate() -> dict:
        if args.command == "bench":
            # rows carry their own budgets
            return _dispatch(args, cfg)
        with fuel(cfg.fuel):
            return _dispatch(args, cfg)

    start = time.perf_counter()
    try:
        report = run_deep(evaluate)
    except (UsageError, DslError, ArityError) as exc:
        print(f"omnisearch: {exc}", file=err)
        return EXIT_USAGE
    except NatOverflow as exc:
        print(f"omnisearch: overflow: {exc}", file=err)
        return EXIT_OVERFLOW
    except (FuelExhausted, RecursionError) as exc:
        print(f"omnisearch: fuel exhausted: {exc}", file=err)
        return EXIT_FUEL
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)

    if cfg.output == "json":
        print(json.dumps(report), file=out)
    else:
        print(render_text(args.command, report), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
