import random

import pytest

from omnisearch.dsl import parse_function, random_function
from omnisearch.fan import fan_modulus, fn_equal
from omnisearch.natsets import selector_finite
from omnisearch.core import Seq
from omnisearch.product import box_selectors, cantor_selectors, fast_pi_product

from oracles import Point, minimal_modulus, points

CANTOR = [[0, 1]]


@pytest.mark.parametrize("text, expected", [("a[2]", 3), ("7", 0), ("a[0] + a[3]", 4)])
def test_modulus_examples(text, expected, deep):
    f = parse_function(text)
    assert minimal_modulus(f, CANTOR * max(f.modulus_bound, 1)) == expected
    assert deep(fan_modulus, cantor_selectors(), f) == expected


def test_pairs_method_agrees_on_small_moduli(deep):
    rng = random.Random(11)
    for _ in range(15):
        f = random_function(rng, rng.randint(0, 4), depth=3)
        fast = deep(fan_modulus, cantor_selectors(), f)
        slow = deep(fan_modulus, cantor_selectors(), f, method="pairs")
        assert fast == slow == minimal_modulus(f, CANTOR * max(f.modulus_bound, 1))


def test_unknown_method():
    with pytest.raises(ValueError):
        fan_modulus(cantor_selectors(), lambda a: 0, method="nope")


def test_modulus_on_corpus(deep):
    rng = random.Random(5)
    for _ in range(40):
        f = random_function(rng, rng.randint(0, 8), depth=3)
        expected = minimal_modulus(f, CANTOR * max(f.modulus_bound, 1))
        assert deep(fan_modulus, cantor_selectors(), f) == expected, f.text


def test_modulus_with_fast_product(deep):
    f = parse_function("a[1] * a[4]")
    assert deep(fan_modulus, cantor_selectors(), f, fast_pi_product) == 5


def test_modulus_zero_iff_constant_on_box(deep):
    rng = random.Random(3)
    for _ in range(40):
        box = [sorted(rng.sample(range(4), rng.randint(1, 3))) for _ in range(3)]
        f = random_function(rng, 3, depth=2)
        constant = len({f(Point(pt)) for pt in points(box)}) == 1
        assert (deep(fan_modulus, box_selectors(box), f) == 0) == constant


def test_modulus_skips_singleton_factors(deep):
    # only factor 1 varies, so index 2 never matters here
    eps = Seq(lambda i: selector_finite([0, 1] if i == 1 else [3]))
    assert deep(fan_modulus, eps, parse_function("a[1] + a[2]")) == 2


def test_equality_examples(deep):
    eq = lambda f, g: deep(fn_equal, cantor_selectors(), parse_function(f), parse_function(g))
    assert eq("a[0] + a[1]", "a[1] + a[0]") == 1
    assert [pt for pt in points(CANTOR * 2) if pt[0] != pt[1]][0] == (0, 1)
    assert eq("a[0]", "a[1]") == 0
    assert eq("a[3] * 2", "a[3] * 2") == 1


def test_equality_is_symmetric_and_reflexive(deep):
    rng = random.Random(8)
    for _ in range(30):
        m = rng.randint(1, 6)
        f, g = random_function(rng, m, depth=2), random_function(rng, m, depth=2)
        brute = int(all(f(Point(pt)) == g(Point(pt)) for pt in points(CANTOR * m)))
        fg = deep(fn_equal, cantor_selectors(), f, g)
        assert fg == deep(fn_equal, cantor_selectors(), g, f) == brute
        assert deep(fn_equal, cantor_selectors(), f, f) == 1
