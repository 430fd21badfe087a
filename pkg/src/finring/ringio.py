"""RINGTAB v1 serialization.

Line-oriented text: `RINGTAB 1`, `order n`, `zero i`, `one j`, one line of
space-separated labels, then n rows of the addition table and n rows of the
multiplication table.  Round-trips bit-exactly; import re-verifies the ring
axioms before handing the table out.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import RingFormatError
from .table import RingTable, checked


def dumps_ring(R: RingTable) -> str:
    lines = [
        "RINGTAB 1",
        f"order {R.order}",
        f"zero {R.zero}",
        f"one {R.one}",
        " ".join(R.labels),
    ]
    for row in R.add:
        lines.append(" ".join(str(int(v)) for v in row))
    for row in R.mul:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def export_ring(R: RingTable, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_ring(R))


def _intline(lines, i, key):
    if i >= len(lines):
        raise RingFormatError(f"missing {key!r} line", line=i + 1)
    parts = lines[i].split()
    if len(parts) != 2 or parts[0] != key:
        raise RingFormatError(f"expected {key!r} and a value, got {lines[i]!r}", line=i + 1)
    try:
        return int(parts[1])
    except ValueError:
        raise RingFormatError(f"non-integer value in {lines[i]!r}", line=i + 1)


def _table_rows(lines, start, n, what):
    rows = []
    for r in range(n):
        i = start + r
        if i >= len(lines):
            raise RingFormatError(f"missing row {r} of the {what} table", line=i + 1)
        parts = lines[i].split()
        if len(parts) != n:
            raise RingFormatError(
                f"{what} row {r} has {len(parts)} entries, expected {n}", line=i + 1
            )
        try:
            vals = [int(v) for v in parts]
        except ValueError:
            raise RingFormatError(f"non-integer entry in {what} row {r}", line=i + 1)
        if any(v < 0 or v >= n for v in vals):
            raise RingFormatError(f"{what} row {r} entry out of range", line=i + 1)
        rows.append(vals)
    return np.array(rows, dtype=np.int16)


def loads_ring(text: str, provenance: str = "") -> RingTable:
    lines = text.splitlines()
    if not lines or lines[0].split() != ["RINGTAB", "1"]:
        raise RingFormatError("file does not start with 'RINGTAB 1'", line=1)
    n = _intline(lines, 1, "order")
    zero = _intline(lines, 2, "zero")
    one = _intline(lines, 3, "one")
    if len(lines) < 5:
        raise RingFormatError("missing label line", line=5)
    labels = lines[4].split()
    if len(labels) != n:
        raise RingFormatError(f"{len(labels)} labels for order {n}", line=5)
    add = _table_rows(lines, 5, n, "addition")
    mul = _table_rows(lines, 5 + n, n, "multiplication")
    extra = 5 + 2 * n
    if any(line.strip() for line in lines[extra:]):
        raise RingFormatError("trailing content after the tables", line=extra + 1)
    R = RingTable(n, labels, add, mul, zero, one, provenance=provenance)
    return checked(R)


def import_ring(path) -> RingTable:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    return loads_ring(text, provenance=f"ringtab:{os.path.basename(str(path))}")
