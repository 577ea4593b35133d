"""Recursions and explicit formulas over one- to three-prime shapes.

Everything here is derived independently of the definitional evaluators in
core.py, precisely so the two routes can be cross-checked against each other.
The recursion for the divisor sum over three primes is implemented with sum
terms throughout its inclusion-exclusion body; its correctness gate is exact
agreement with the definitional evaluator on the full verification grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb

from .arith import divisors, is_prime
from .core import a


@dataclass(frozen=True)
class PrimePowerShape:
    """An n of the form p^c, p^c q^d, or p^c q^d r^e; zero exponents absorb away."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) > 3:
            raise ValueError("shapes are limited to three distinct primes")
        primes = [p for p, _ in self.pairs]
        if len(set(primes)) != len(primes):
            raise ValueError(f"primes must be distinct: {primes}")
        for p, e in self.pairs:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if e < 0:
                raise ValueError(f"exponent must be >= 0 in {p}^{e}")

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> PrimePowerShape:
        return cls(tuple(pairs))

    def normalized(self) -> PrimePowerShape:
        """Drop zero exponents; a zero-exponent prime contributes nothing."""
        return PrimePowerShape(tuple((p, e) for p, e in self.pairs if e > 0))

    @property
    def n(self) -> int:
        value = 1
        for p, e in self.pairs:
            value *= p**e
        return value

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.pairs)


def a_distinct_primes(k: int) -> int:
    """Count of recursive divisors for a product of k distinct primes.

    Uses the binomial recursion over subsets of the prime set; the result
    does not depend on which primes are chosen (OEIS A000629 doubled past
    the first term).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    values = [1]
    for j in range(1, k + 1):
        values.append(1 + sum(comb(j, i) * values[i] for i in range(j)))
    return values[k]


@cache
def _a_rec(exponents: tuple[int, ...]) -> int:
    exponents = tuple(e for e in exponents if e > 0)
    if not exponents:
        return 1
    if len(exponents) == 1:
        (c,) = exponents
        return 2 * _a_rec((c - 1,))
    if len(exponents) == 2:
        c, e2 = exponents
        return 2 * (_a_rec((c - 1, e2)) + _a_rec((c, e2 - 1)) - _a_rec((c - 1, e2 - 1)))
    c, e2, e3 = exponents
    return 2 * (
        _a_rec((c - 1, e2, e3))
        + _a_rec((c, e2 - 1, e3))
        + _a_rec((c, e2, e3 - 1))
        - _a_rec((c, e2 - 1, e3 - 1))
        - _a_rec((c - 1, e2, e3 - 1))
        - _a_rec((c - 1, e2 - 1, e3))
        + _a_rec((c - 1, e2 - 1, e3 - 1))
    )


def a_recursion(shape: PrimePowerShape) -> int:
    """Recursive-divisor count via the doubling recursions; prime-agnostic."""
    return _a_rec(shape.normalized().exponents)


def _a_closed_two(c: int, d: int) -> int:
    return 2**c * sum(comb(d, i) * comb(c + i, i) for i in range(d + 1))


def a_closed(shape: PrimePowerShape) -> int:
    """Recursive-divisor count via the explicit binomial formulas.

    Evaluated in the order the shape lists its exponents; the value is
    invariant under reordering, which the test grid exercises.
    """
    exps = shape.normalized().exponents
    if not exps:
        return 1
    if len(exps) == 1:
        return 2 ** exps[0]
    if len(exps) == 2:
        return _a_closed_two(*exps)
    c, d, e = exps
    return sum(
        (-1) ** j * comb(d, j) * comb(c + d - j, d) * _a_closed_two(c + d - j, e)
        for j in range(d + 1)
    )


@cache
def _b_rec(pairs: tuple[tuple[int, int], ...]) -> int:
    pairs = tuple((p, e) for p, e in pairs if e > 0)
    if not pairs:
        return 1
    if len(pairs) == 1:
        (p, c), = pairs
        return 2 * _b_rec(((p, c - 1),)) + (p - 1) * p ** (c - 1)
    if len(pairs) == 2:
        (p, c), (q, d) = pairs
        return (
            2
            * (
                _b_rec(((p, c - 1), (q, d)))
                + _b_rec(((p, c), (q, d - 1)))
                - _b_rec(((p, c - 1), (q, d - 1)))
            )
            + (p - 1) * (q - 1) * p ** (c - 1) * q ** (d - 1)
        )
    (p, c), (q, d), (r, e) = pairs
    return (
        2
        * (
            _b_rec(((p, c - 1), (q, d), (r, e)))
            + _b_rec(((p, c), (q, d - 1), (r, e)))
            + _b_rec(((p, c), (q, d), (r, e - 1)))
            - _b_rec(((p, c), (q, d - 1), (r, e - 1)))
            - _b_rec(((p, c - 1), (q, d), (r, e - 1)))
            - _b_rec(((p, c - 1), (q, d - 1), (r, e)))
            + _b_rec(((p, c - 1), (q, d - 1), (r, e - 1)))
        )
        + (p - 1) * (q - 1) * (r - 1) * p ** (c - 1) * q ** (d - 1) * r ** (e - 1)
    )


def b_recursion(shape: PrimePowerShape) -> int:
    """Recursive-divisor sum via the prime-power recursions; needs concrete primes."""
    return _b_rec(shape.normalized().pairs)


def B_closed(shape: PrimePowerShape) -> Fraction:
    """b(n)/n as an exact rational, from the closed forms for 1-2 primes."""
    pairs = shape.normalized().pairs
    if len(pairs) > 2:
        raise ValueError("closed forms for the normalized ratio cover at most two primes")
    if not pairs:
        return Fraction(1)
    if len(pairs) == 1:
        (p, c), = pairs
        if p == 2:
            return Fraction(c + 2, 2)
        return Fraction((p - 1) * p**c - 2**c, (p - 2) * p**c)
    (p, c), (q, d) = pairs
    if p == 2:
        total = sum(
            Fraction(sum(comb(j, k) * comb(c + k + 1, k + 1) for k in range(j + 1)), q**j)
            for j in range(d + 1)
        )
    else:
        total = sum(
            Fraction(
                2**i * sum(comb(i + k, k) * comb(j, k) for k in range(j + 1)),
                p**i * q**j,
            )
            for i in range(c + 1)
            for j in range(d + 1)
        )
    return Fraction(1, 2) + total / 2


def B_from_A(n: int) -> Fraction:
    """b(n)/n computed from recursive-divisor counts over the divisors of n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return Fraction(1, 2) + sum(Fraction(a(m), m) for m in divisors(n)) / 2
