"""Sieve-driven search for record-setting integers.

Four kinds of records are tracked: counts of recursive divisors (RHC) and
their classical analogue d(n) (HC), plus the normalized sums b(n)/n (RSA)
and sigma(n)/n (SA).  A record is strict: ties never qualify.  Ratio kinds
are decided by exact cross-multiplied integer comparison; a conservative
float prescan only narrows the candidate set, never the decision.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Flag, auto
from fractions import Fraction

import numpy as np

from . import sieve
from .arith import Factorization, d_of, factorize, sigma_of
from .core import a, b


class RecordKind(Flag):
    RHC = auto()  # record count of recursive divisors
    RSA = auto()  # record b(n)/n
    HC = auto()  # record divisor count
    SA = auto()  # record sigma(n)/n


ALL_KINDS = RecordKind.RHC | RecordKind.RSA | RecordKind.HC | RecordKind.SA
_KIND_ORDER = (RecordKind.RHC, RecordKind.RSA, RecordKind.HC, RecordKind.SA)


def kind_names(kinds: RecordKind) -> list[str]:
    return [k.name for k in _KIND_ORDER if k in kinds]


def parse_kinds(text: str) -> RecordKind:
    """Parse a comma-separated kind list such as 'RHC,RSA' (case-insensitive)."""
    kinds = RecordKind(0)
    for token in text.split(","):
        token = token.strip().upper()
        if not token:
            continue
        if token == "ALL":
            return ALL_KINDS
        try:
            kinds |= RecordKind[token]
        except KeyError:
            raise ValueError(f"unknown record kind {token!r}; choose from RHC, RSA, HC, SA")
    if not kinds:
        raise ValueError("no record kinds given")
    return kinds


@dataclass(frozen=True)
class RecordEntry:
    """One record-setting integer with every tracked quantity attached."""

    n: int
    factorization: Factorization
    kinds: RecordKind
    a: int
    b: int
    d: int
    sigma: int
    tau: int
    tau_cofactor: int

    @property
    def b_ratio(self) -> Fraction:
        return Fraction(self.b, self.n)

    @property
    def sigma_ratio(self) -> Fraction:
        return Fraction(self.sigma, self.n)

    def record_value(self, kind: RecordKind) -> int | Fraction:
        """The quantity this kind sets records in."""
        if kind == RecordKind.RHC:
            return self.a
        if kind == RecordKind.HC:
            return self.d
        if kind == RecordKind.RSA:
            return self.b_ratio
        if kind == RecordKind.SA:
            return self.sigma_ratio
        raise ValueError(f"record_value needs a single kind, got {kind}")


@dataclass(frozen=True)
class RecordTable:
    """Record-setters up to a bound, ascending by n, flagged by kind."""

    bound: int
    kinds: RecordKind
    entries: tuple[RecordEntry, ...]

    def numbers(self, kind: RecordKind) -> list[int]:
        return [e.n for e in self.entries if kind in e.kinds]

    def entry(self, n: int) -> RecordEntry | None:
        ns = [e.n for e in self.entries]
        i = bisect_left(ns, n)
        if i < len(ns) and ns[i] == n:
            return self.entries[i]
        return None

    def check(self) -> None:
        """Internal consistency: strict growth per kind, n=1 first, RHC shape."""
        for kind in _KIND_ORDER:
            if kind not in self.kinds:
                continue
            chain = [e for e in self.entries if kind in e.kinds]
            if not chain or chain[0].n != 1:
                raise AssertionError(f"{kind.name} records must start at n=1")
            values = [e.record_value(kind) for e in chain]
            if any(u >= v for u, v in zip(values, values[1:])):
                raise AssertionError(f"{kind.name} record values must strictly increase")
        if RecordKind.RHC in self.kinds:
            for e in self.entries:
                if RecordKind.RHC in e.kinds:
                    exps = [x for _, x in e.factorization.pairs]
                    if exps != sorted(exps, reverse=True):
                        raise AssertionError(
                            f"count record {e.n} has increasing exponents: {exps}"
                        )


def _int_record_indices(arr: np.ndarray) -> list[int]:
    values = arr[1:]
    running = np.maximum.accumulate(values)
    prev_max = np.concatenate(([0], running[:-1]))
    return (np.nonzero(values > prev_max)[0] + 1).tolist()


def _ratio_record_indices(arr: np.ndarray) -> list[int]:
    n_values = np.arange(1, len(arr), dtype=np.float64)
    ratios = arr[1:].astype(np.float64) / n_values
    running = np.maximum.accumulate(ratios)
    prev_max = np.concatenate(([0.0], running[:-1]))
    # Conservative prescan: float error is ~1e-15 relative, so no true record
    # can fall below the shifted running max by a 1e-9 factor.
    candidates = (np.nonzero(ratios >= prev_max * (1 - 1e-9))[0] + 1).tolist()
    out: list[int] = []
    best_num, best_den = 0, 1
    for n in candidates:
        value = int(arr[n])
        if value * best_den > best_num * n:
            out.append(n)
            best_num, best_den = value, n
    return out


def tau_decompose(n: int) -> tuple[int, int]:
    """Split a(n) as cofactor * 2**tau, tau being the largest exponent of n."""
    fac = factorize(n)
    tau = fac.max_exponent
    count = a(n)
    if count % 2**tau:
        raise AssertionError(f"a({n}) = {count} is not divisible by 2^{tau}")
    return tau, count >> tau


def sieve_records(
    bound: int, kinds: RecordKind = ALL_KINDS, *, max_memory: int | None = None
) -> RecordTable:
    """Find every strict record-setter up to bound for the requested kinds."""
    if not kinds:
        raise ValueError("no record kinds requested")
    needed = {
        RecordKind.RHC: "a",
        RecordKind.RSA: "b",
        RecordKind.HC: "d",
        RecordKind.SA: "sigma",
    }
    wanted = [kind for kind in _KIND_ORDER if kind in kinds]
    sieve.check_budget(bound, len(wanted), max_memory)

    flags: dict[int, RecordKind] = {}
    arrays: dict[RecordKind, np.ndarray] = {}
    for kind in wanted:
        arr = sieve.TABLE_BUILDERS[needed[kind]](bound)
        arrays[kind] = arr
        record_ns = (
            _int_record_indices(arr)
            if kind in (RecordKind.RHC, RecordKind.HC)
            else _ratio_record_indices(arr)
        )
        for n in record_ns:
            flags[n] = flags.get(n, RecordKind(0)) | kind

    entries = []
    for n in sorted(flags):
        fac = factorize(n)
        av, bv = a(n), b(n)
        # The per-n recursion and the batch sieve are required to agree.
        if RecordKind.RHC in arrays and av != int(arrays[RecordKind.RHC][n]):
            raise AssertionError(f"a({n}): sieve and recursion disagree")
        if RecordKind.RSA in arrays and bv != int(arrays[RecordKind.RSA][n]):
            raise AssertionError(f"b({n}): sieve and recursion disagree")
        tau = fac.max_exponent
        entries.append(
            RecordEntry(
                n=n,
                factorization=fac,
                kinds=flags[n],
                a=av,
                b=bv,
                d=d_of(fac),
                sigma=sigma_of(fac),
                tau=tau,
                tau_cofactor=av >> tau,
            )
        )
    table = RecordTable(bound=bound, kinds=kinds, entries=tuple(entries))
    table.check()
    return table


def classify(n: int, table: RecordTable) -> RecordKind:
    """Record flags for n according to a finished table; empty flag if none."""
    if n < 1 or n > table.bound:
        raise ValueError(f"n = {n} is outside the table bound {table.bound}")
    entry = table.entry(n)
    return entry.kinds if entry is not None else RecordKind(0)
