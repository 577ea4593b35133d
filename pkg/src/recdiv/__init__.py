"""Recursive divisor function toolkit.

Exact evaluators for the recursive divisor function and its derived
quantities, O(N log N) divisor-sum sieves, record searches, closed forms,
and divisor-tree geometry with SVG rendering.
"""

from .arith import (
    ExponentSignature,
    Factorization,
    d,
    divisors,
    factorize,
    is_prime,
    proper_divisors,
    sigma,
    spf_sieve,
)
from .closedforms import (
    B_closed,
    B_from_A,
    PrimePowerShape,
    a_closed,
    a_distinct_primes,
    a_recursion,
    b_recursion,
)
from .core import (
    DivisorProfile,
    SizedCountTable,
    a,
    a_sized,
    b,
    g,
    g_enumerated,
    kappa,
    ordered_factorizations,
    profile,
)
from .errors import BudgetError, MemoryGuardError, RecdivError
from .records import (
    ALL_KINDS,
    RecordEntry,
    RecordKind,
    RecordTable,
    classify,
    sieve_records,
    tau_decompose,
)
from .tree import (
    ArmDirection,
    DivisorTreeLayout,
    PlacedSquare,
    SvgStyle,
    layout,
    self_overlap,
    to_svg,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "ArmDirection",
    "B_closed",
    "B_from_A",
    "BudgetError",
    "DivisorProfile",
    "DivisorTreeLayout",
    "ExponentSignature",
    "Factorization",
    "MemoryGuardError",
    "PlacedSquare",
    "PrimePowerShape",
    "RecdivError",
    "RecordEntry",
    "RecordKind",
    "RecordTable",
    "SizedCountTable",
    "SvgStyle",
    "a",
    "a_closed",
    "a_distinct_primes",
    "a_recursion",
    "a_sized",
    "b",
    "b_recursion",
    "classify",
    "d",
    "divisors",
    "factorize",
    "g",
    "g_enumerated",
    "is_prime",
    "kappa",
    "layout",
    "ordered_factorizations",
    "profile",
    "proper_divisors",
    "self_overlap",
    "sieve_records",
    "sigma",
    "spf_sieve",
    "tau_decompose",
    "to_svg",
]
