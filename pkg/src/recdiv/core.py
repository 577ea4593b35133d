"""The recursive divisor function family.

kappa(n, x) sums n^x plus kappa of every proper divisor, recursively.
Its x = 0 and x = 1 specializations are the two quantities this package
revolves around: the count a(n) and the sum b(n) of recursive divisors.
g(n) counts ordered factorizations into integers > 1 and doubles into
a(n); it is implemented both by the divisor recursion and by a raw tuple
enumeration so the two can cross-check each other.

All functions are pure; memo caches are process-local functools caches,
safe to share across threads under CPython.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product
from typing import Iterator

from .arith import Factorization, d_of, divisors, factorize, proper_divisors, sigma_of
from .errors import BudgetError

DEFAULT_TUPLE_BUDGET = 1_000_000


@cache
def _kappa(n: int, x: int) -> int:
    return n**x + sum(_kappa(m, x) for m in proper_divisors(n))


def kappa(n: int, x: int) -> int:
    """Recursive divisor function: n^x plus kappa over proper divisors."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if x < 0:
        raise ValueError(f"x must be a nonnegative integer, got {x}")
    return _kappa(n, x)


@cache
def a_from_signature(exponents: tuple[int, ...]) -> int:
    """Count of recursive divisors for any n with the given exponent signature.

    The count depends only on the exponents, so divisors are enumerated as
    exponent vectors and re-keyed by their own signatures.
    """
    total = 1
    for combo in product(*(range(e + 1) for e in exponents)):
        if combo == exponents:
            continue
        sub = tuple(sorted((c for c in combo if c), reverse=True))
        total += a_from_signature(sub)
    return total


def a(n: int) -> int:
    """Number of recursive divisors of n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return a_from_signature(factorize(n).signature.exponents)


@cache
def _b(n: int) -> int:
    return n + sum(_b(m) for m in proper_divisors(n))


def b(n: int) -> int:
    """Sum of recursive divisors of n; depends on the primes, not just exponents."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return _b(n)


@cache
def _g(n: int) -> int:
    if n == 1:
        return 1
    return sum(_g(m) for m in proper_divisors(n))


def g(n: int) -> int:
    """Number of ordered factorizations of n into integers > 1, by divisor recursion."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return _g(n)


def ordered_factorizations(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of integers > 1 whose ordered product is n.

    Deliberately unmemoized: this is the independence oracle for the claim
    that a(n) doubles g(n), so it must not share machinery with the
    divisor recursion it checks.
    """
    if n == 1:
        yield ()
        return
    for first in divisors(n)[1:]:
        for rest in ordered_factorizations(n // first):
            yield (first, *rest)


def g_enumerated(n: int, budget: int = DEFAULT_TUPLE_BUDGET) -> int:
    """Count ordered factorizations by explicit enumeration.

    Walks every tuple, so the cost is g(n) itself; refuses past `budget`.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    count = 0
    for _ in ordered_factorizations(n):
        count += 1
        if count > budget:
            raise BudgetError(
                f"ordered factorization enumeration for {n} exceeded budget {budget}"
            )
    return count


@dataclass(frozen=True)
class SizedCountTable:
    """Counts of recursive divisors of each size k for one n.

    Missing keys mean zero; only divisors of n can appear.
    """

    n: int
    entries: dict[int, int]

    def count(self, k: int) -> int:
        return self.entries.get(k, 0)

    @property
    def total(self) -> int:
        return sum(self.entries.values())


@cache
def _sized(n: int) -> tuple[tuple[int, int], ...]:
    counts = {n: 1}
    for m in proper_divisors(n):
        for k, c in _sized(m):
            counts[k] = counts.get(k, 0) + c
    return tuple(sorted(counts.items()))


def a_sized(n: int) -> SizedCountTable:
    """Full size-classified table of recursive divisor counts for n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    table = SizedCountTable(n, dict(_sized(n)))
    if table.count(n) != 1:
        raise AssertionError(f"size table of {n} lost its root entry")
    if table.total != a(n):
        raise AssertionError(f"size table of {n} sums to {table.total}, expected {a(n)}")
    return table


@dataclass(frozen=True)
class DivisorProfile:
    """Bundle of the divisor quantities of one n, with exact ratio forms."""

    n: int
    d: int
    sigma: int
    a: int
    b: int
    g: int
    A: Fraction
    B: Fraction


def profile(n: int) -> DivisorProfile:
    """Compute all divisor quantities of n and check their cross relations."""
    fac: Factorization = factorize(n)
    dv = d_of(fac)
    sv = sigma_of(fac)
    av = a(n)
    bv = b(n)
    gv = g(n)
    expected_a = 1 if n == 1 else 2 * gv
    if av != expected_a:
        raise AssertionError(f"a({n}) = {av} but ordered factorizations give {gv}")
    if av < dv or bv < sv:
        raise AssertionError(f"recursive counts of {n} fell below the plain divisor ones")
    if av % 2**fac.max_exponent:
        raise AssertionError(f"a({n}) = {av} not divisible by 2^{fac.max_exponent}")
    return DivisorProfile(n, dv, sv, av, bv, gv, Fraction(av, n), Fraction(bv, n))
