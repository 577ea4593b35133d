"""Batch divisor-sum sieves: whole-range arrays in O(N log N).

Each array is filled by one pass that adds the finished value at n to all
multiples of n, so position n already holds its proper-divisor contributions
when the loop reaches it.  Arrays are int64; the bound guard below makes
wraparound impossible, and results are immutable once returned.

Overflow guard: a(n) and b(n) are both <= n^2 (induction: proper divisors of
n are n/k for k >= 2, so their squares sum to < 0.645 n^2), and d, sigma, g
are smaller still.  Hence int64 cannot wrap for any bound <= isqrt(2^63 - 1);
larger bounds are refused loudly rather than sieved.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .errors import MemoryGuardError

INT64_SAFE_LIMIT = isqrt(2**63 - 1)

# Sized for the default desk workload: four int64 arrays to a 1e7 bound.
DEFAULT_MAX_MEMORY = 4 * 8 * (10**7 + 1)


def check_budget(limit: int, arrays: int, max_memory: int | None = None) -> None:
    """Refuse a sieve that would overflow int64 or exceed the memory budget."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > INT64_SAFE_LIMIT:
        raise OverflowError(
            f"bound {limit} exceeds {INT64_SAFE_LIMIT}, the largest bound for which "
            "int64 accumulation provably cannot wrap"
        )
    allowed = DEFAULT_MAX_MEMORY if max_memory is None else max_memory
    needed = arrays * 8 * (limit + 1)
    if needed > allowed:
        raise MemoryGuardError(
            f"sieving to {limit} needs {needed:,} bytes for {arrays} int64 "
            f"array(s); allowed {allowed:,} (raise max_memory to proceed)"
        )


def _a_array(limit: int) -> np.ndarray:
    arr = np.ones(limit + 1, dtype=np.int64)
    arr[0] = 0
    for n in range(1, limit // 2 + 1):
        arr[2 * n :: n] += arr[n]
    return arr


def _b_array(limit: int) -> np.ndarray:
    arr = np.arange(limit + 1, dtype=np.int64)
    for n in range(1, limit // 2 + 1):
        arr[2 * n :: n] += arr[n]
    return arr


def _g_array(limit: int) -> np.ndarray:
    arr = np.zeros(limit + 1, dtype=np.int64)
    arr[1] = 1
    for n in range(1, limit // 2 + 1):
        arr[2 * n :: n] += arr[n]
    return arr


def _d_array(limit: int) -> np.ndarray:
    arr = np.zeros(limit + 1, dtype=np.int64)
    for n in range(1, limit + 1):
        arr[n::n] += 1
    return arr


def _sigma_array(limit: int) -> np.ndarray:
    arr = np.zeros(limit + 1, dtype=np.int64)
    for n in range(1, limit + 1):
        arr[n::n] += n
    return arr


def a_array(limit: int, *, max_memory: int | None = None) -> np.ndarray:
    """Counts of recursive divisors for 0..limit (index 0 unused)."""
    check_budget(limit, 1, max_memory)
    return _a_array(limit)


def b_array(limit: int, *, max_memory: int | None = None) -> np.ndarray:
    """Sums of recursive divisors for 0..limit (index 0 unused)."""
    check_budget(limit, 1, max_memory)
    return _b_array(limit)


def g_array(limit: int, *, max_memory: int | None = None) -> np.ndarray:
    """Ordered factorization counts for 0..limit (index 0 unused)."""
    check_budget(limit, 1, max_memory)
    return _g_array(limit)


def d_array(limit: int, *, max_memory: int | None = None) -> np.ndarray:
    """Divisor counts for 0..limit (index 0 unused)."""
    check_budget(limit, 1, max_memory)
    return _d_array(limit)


def sigma_array(limit: int, *, max_memory: int | None = None) -> np.ndarray:
    """Divisor sums for 0..limit (index 0 unused)."""
    check_budget(limit, 1, max_memory)
    return _sigma_array(limit)


TABLE_BUILDERS = {
    "a": _a_array,
    "b": _b_array,
    "g": _g_array,
    "d": _d_array,
    "sigma": _sigma_array,
}


def table_array(fn: str, limit: int, *, max_memory: int | None = None) -> np.ndarray:
    """Sieve one named table function over 1..limit."""
    try:
        builder = TABLE_BUILDERS[fn]
    except KeyError:
        raise ValueError(f"unknown table function {fn!r}; choose from {sorted(TABLE_BUILDERS)}")
    check_budget(limit, 1, max_memory)
    return builder(limit)
