"""Closed-form bounds on e_2(n) and the ratio table against n log2 n.

Integer formulas use bit lengths for floor/ceil of log2, never floats.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInputError

LEMMA2_II_MIN = 1 << 17


def floor_log2(n: int) -> int:
    return n.bit_length() - 1


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def lemma1_upper(n: int) -> int:
    """n * ceil(log2 n) - (floor(log2 n) - 1)^2, exactly."""
    if n < 2:
        raise InvalidInputError("upper bound is stated for n >= 2")
    return n * ceil_log2(n) - (floor_log2(n) - 1) ** 2


def lemma2_lower(n: int) -> tuple[float, float | None]:
    """The two lower bounds on e_2(n); the second is ``None`` below 2^17.

    Small n yields negative (vacuous) values, returned unclamped.
    """
    if n < 2:
        raise InvalidInputError("lower bounds are stated for n >= 2")
    lg = math.log2(n)
    lower_i = min(n / 2 * lg, n * lg - 4 * n)
    lower_ii = n * lg - 2 * n if n >= LEMMA2_II_MIN else None
    return lower_i, lower_ii


@dataclass(frozen=True)
class BoundsRow:
    n: int
    upper: int
    lower_i: float
    lower_ii: float | None
    upper_ratio: float
    lower_ratio: float


def bounds_row(n: int) -> BoundsRow:
    if n < 3:
        raise InvalidInputError(f"ratio rows need n >= 3, got {n}")
    upper = lemma1_upper(n)
    lower_i, lower_ii = lemma2_lower(n)
    scale = n * math.log2(n)
    lower = lower_i if lower_ii is None else max(lower_i, lower_ii)
    return BoundsRow(n, upper, lower_i, lower_ii, upper / scale, lower / scale)


def ratio_table(ns: Iterable[int]) -> list[BoundsRow]:
    return [bounds_row(n) for n in ns]


def sandwich_check(ns: Iterable[int]) -> bool:
    """Check lower_ratio <= upper_ratio and both within O(1/log2 n) of 1.

    Every n must be at least 2^17, where the sharper lower bound applies.
    """
    ns = list(ns)
    small = [n for n in ns if n < LEMMA2_II_MIN]
    if small:
        raise InvalidInputError(f"sandwich check needs n >= 2^17; got {small}")
    for row in ratio_table(ns):
        lg = math.log2(row.n)
        if not (row.lower_ratio <= row.upper_ratio):
            return False
        if row.lower_ratio < 1 - 2 / lg - 1e-12:
            return False
        if row.upper_ratio > 1 + 1 / lg:
            return False
    return True


CSV_HEADER = ("n", "upper", "lower_i", "lower_ii", "upper_ratio", "lower_ratio")


def rows_to_csv(rows: Iterable[BoundsRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([
            r.n,
            r.upper,
            repr(r.lower_i),
            "NA" if r.lower_ii is None else repr(r.lower_ii),
            f"{r.upper_ratio:.12f}",
            f"{r.lower_ratio:.12f}",
        ])
    return buf.getvalue()
