"""Serialization: CSV, JSON, and OEIS b-file output for tables and records.

Rationals are serialized as "numerator/denominator" strings, never as
floating decimals, so files round-trip exactly.
"""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .records import RecordKind, RecordTable, kind_names


class ExportFormat(Enum):
    CSV = "csv"
    JSON = "json"
    BFILE = "bfile"


def rational_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def format_table(name: str, values: Sequence[int], fmt: ExportFormat) -> str:
    """Serialize values for n = 1..len(values) under the given format.

    b-file lines are "n value", 1-indexed and newline-terminated.
    """
    if fmt is ExportFormat.CSV:
        lines = [f"n,{name}"]
        lines.extend(f"{n},{v}" for n, v in enumerate(values, start=1))
        return "\n".join(lines) + "\n"
    if fmt is ExportFormat.JSON:
        rows = [{"n": n, name: int(v)} for n, v in enumerate(values, start=1)]
        return json.dumps(rows, separators=(",", ":")) + "\n"
    lines = [f"{n} {v}" for n, v in enumerate(values, start=1)]
    return "\n".join(lines) + "\n"


def parse_table(text: str, fmt: ExportFormat) -> list[tuple[int, int]]:
    """Parse format_table output back into (n, value) pairs."""
    if fmt is ExportFormat.CSV:
        lines = [line for line in text.splitlines() if line]
        out = []
        for line in lines[1:]:
            n_text, value_text = line.split(",")
            out.append((int(n_text), int(value_text)))
        return out
    if fmt is ExportFormat.JSON:
        rows = json.loads(text)
        out = []
        for row in rows:
            n = row["n"]
            (value,) = (v for k, v in row.items() if k != "n")
            out.append((int(n), int(value)))
        return out
    out = []
    for line in text.splitlines():
        if not line:
            continue
        n_text, value_text = line.split()
        out.append((int(n_text), int(value_text)))
    return out


_RECORD_COLUMNS = (
    "n",
    "factorization",
    "kinds",
    "a",
    "b",
    "d",
    "sigma",
    "tau",
    "tau_cofactor",
    "b_over_n",
    "sigma_over_n",
)


def format_records(table: RecordTable, fmt: ExportFormat) -> str:
    """Serialize a record table.

    The b-file form holds a single sequence, so it requires the table to
    have been searched for exactly one kind.
    """
    if fmt is ExportFormat.BFILE:
        single = [k for k in RecordKind if k in table.kinds]
        if len(single) != 1:
            raise ValueError("b-file export needs a table searched for exactly one kind")
        ns = table.numbers(single[0])
        return "\n".join(f"{i} {n}" for i, n in enumerate(ns, start=1)) + "\n"
    if fmt is ExportFormat.CSV:
        lines = [",".join(_RECORD_COLUMNS)]
        for e in table.entries:
            lines.append(
                f"{e.n},{e.factorization},{'|'.join(kind_names(e.kinds))},"
                f"{e.a},{e.b},{e.d},{e.sigma},{e.tau},{e.tau_cofactor},"
                f"{rational_str(e.b_ratio)},{rational_str(e.sigma_ratio)}"
            )
        return "\n".join(lines) + "\n"
    rows = []
    for e in table.entries:
        rows.append(
            {
                "n": e.n,
                "factorization": str(e.factorization),
                "kinds": kind_names(e.kinds),
                "a": e.a,
                "b": e.b,
                "d": e.d,
                "sigma": e.sigma,
                "tau": e.tau,
                "tau_cofactor": e.tau_cofactor,
                "b_over_n": rational_str(e.b_ratio),
                "sigma_over_n": rational_str(e.sigma_ratio),
            }
        )
    return json.dumps(rows, indent=2) + "\n"
