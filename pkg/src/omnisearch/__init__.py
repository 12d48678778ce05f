"""Exhaustive search over infinite spaces: selectors, quantifiers and their combinators."""

from .combinators import PairPoint, image, intersect_decidable, product_pair, union
from .convert import (
    Verdict,
    find_member,
    not_member,
    retraction,
    selector_from_quantifier_baire,
)
from .core import (
    FuelExhausted,
    NatOverflow,
    Seq,
    exists_from_forall,
    exists_from_selector,
    forall_from_exists,
    forall_from_selector,
    fuel,
    generic_selector,
    run_deep,
    seq_cons,
    seq_drop,
    seq_prefix_eq,
    seq_splice,
)
from .dsl import brute_force_exists, eval_pred, parse, parse_function
from .fan import fan_modulus, fn_equal
from .forest import eval_tree, solution_forest, solve_by_forest
from .natsets import (
    NatSet,
    enumerate_nat,
    selector_finite,
    selector_from_quantifier_nat,
    selector_ninf,
    sup_nat,
)
from .product import (
    berger_cantor,
    box_selectors,
    cantor_selectors,
    fast_pi_product,
    lex_cantor,
    pi_product,
    product_selector,
    tree_branch,
    tree_left,
    tree_right,
    tree_root,
)

__version__ = "0.1.0"
