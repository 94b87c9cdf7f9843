"""Worm calculus for polymodal provability logic.

Ordinal notations below Gamma_0, hyperexponentials and hyperlogarithms,
worms with their consistency orders and omega sequences, schedules for
Turing progressions, and an independent oracle that cross-checks it all.
"""

from .ordinal import (
    GammaZeroOverflow,
    Ordinal,
    OMEGA,
    ONE,
    Underflow,
    ZERO,
    ZeroInput,
    add,
    cnf_terms,
    compare,
    from_int,
    hyperexp,
    hyperexp_factor,
    hyperlog,
    last_exponent,
    left_sub,
    omega_power,
    veblen,
    whnf,
)
from .syntax import ParseError, parse_ordinal, parse_worm, print_ordinal, print_worm
from .worm import (
    EQUIVALENT,
    INCOMPARABLE,
    LEFT_BELOW,
    NotBnf,
    NotInFragment,
    RIGHT_BELOW,
    compare_at,
    coordinates_equal,
    demote,
    head,
    is_bnf,
    normalize,
    omega,
    omega_sequence,
    order_type,
    promote,
    remainder,
    worm_of_ordinal,
)
from .turing import ModalityTooLarge, conservativity, schedule
from .oracle import enumerate_worms, verify_ordinal_grid, verify_universe

__version__ = "0.1.0"

__all__ = [
    "GammaZeroOverflow",
    "Ordinal",
    "OMEGA",
    "ONE",
    "Underflow",
    "ZERO",
    "ZeroInput",
    "add",
    "cnf_terms",
    "compare",
    "from_int",
    "hyperexp",
    "hyperexp_factor",
    "hyperlog",
    "last_exponent",
    "left_sub",
    "omega_power",
    "veblen",
    "whnf",
    "ParseError",
    "parse_ordinal",
    "parse_worm",
    "print_ordinal",
    "print_worm",
    "EQUIVALENT",
    "INCOMPARABLE",
    "LEFT_BELOW",
    "NotBnf",
    "NotInFragment",
    "RIGHT_BELOW",
    "compare_at",
    "coordinates_equal",
    "demote",
    "head",
    "is_bnf",
    "normalize",
    "omega",
    "omega_sequence",
    "order_type",
    "promote",
    "remainder",
    "worm_of_ordinal",
    "ModalityTooLarge",
    "conservativity",
    "schedule",
    "enumerate_worms",
    "verify_ordinal_grid",
    "verify_universe",
]
