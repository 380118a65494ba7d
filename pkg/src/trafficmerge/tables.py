"""Grids laid out like the published tables.

Every cell is produced by a library call; nothing here does its own
arithmetic.  A grid is a :class:`Grid`: a header row plus data rows whose
first entry labels the row.  ``None`` marks a cell that is not populated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .bijections import max_heads_tails, phi
from .classes import partition
from .core import ArrivalSequence, simulate
from .counting import m_count_closed, m_count_k_recursive
from .expectation import right_lane_sum_k

__all__ = [
    "Grid",
    "coin_table",
    "count_table",
    "count_k_table",
    "class_table",
    "lane_sum_table",
]


@dataclass(frozen=True)
class Grid:
    title: str
    header: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...]

    def cell(self, row_label: Any, column: str) -> Any:
        col = self.header.index(column)
        for row in self.rows:
            if row[0] == row_label:
                return row[col]
        raise KeyError(row_label)

    def to_dict(self) -> dict:
        return {"title": self.title, "header": list(self.header), "rows": [list(r) for r in self.rows]}


def count_table(max_index: int) -> Grid:
    """Merging paths ending at ``(n, m)`` for ``0 <= n <= m <= max_index``; rows by descending m."""
    header = ("m",) + tuple(f"n={n}" for n in range(max_index + 1))
    rows = []
    for m in range(max_index, -1, -1):
        rows.append((m,) + tuple(m_count_closed(n, m) if n <= m else None for n in range(max_index + 1)))
    return Grid("Number of merging paths ending at (n,m)", header, tuple(rows))


def count_k_table(ks: Sequence[int], m_range: Sequence[int], max_n: int) -> Grid:
    """``M_{n,k}(m)`` blocks, one block of rows per ``k``, rows by descending m."""
    header = ("k", "m") + tuple(f"n={n}" for n in range(max_n + 1))
    rows = []
    for k in ks:
        for m in sorted(m_range, reverse=True):
            rows.append((k, m) + tuple(m_count_k_recursive(n, m, k) if n <= m else None for n in range(max_n + 1)))
    return Grid("Values of M_{n,k}(m)", header, tuple(rows))


def lane_sum_table(max_length: int) -> Grid:
    """Right-lane sums over sequences of length l with k zeros; rows by descending l."""
    header = ("l",) + tuple(f"k={k}" for k in range(max_length + 1))
    rows = []
    for length in range(max_length, -1, -1):
        rows.append(
            (length,) + tuple(right_lane_sum_k(length, k) if k <= length else None for k in range(max_length + 1))
        )
    return Grid("Sum of right lane lengths for sequences of length l with k zeros", header, tuple(rows))


def coin_table(length: int) -> Grid:
    """Arrival sequence, right-lane length, parity vector, coin image, larger face count."""
    header = ("b", "r", "p", "c", "max")
    rows = []
    for value in range(2**length):
        seq = ArrivalSequence.from_int(value, length)
        result = simulate(seq)
        coins = phi(seq)
        rows.append((str(seq), result.r, str(result.parity), str(coins), max_heads_tails(coins)))
    rows.sort(key=lambda row: row[0])
    return Grid("Length-preserving bijection to coin flips", header, tuple(rows))


def class_table(length: int) -> Grid:
    header = ("class", "b", "touches", "right_lane", "size")
    rows = []
    for index, cls in enumerate(partition(length), start=1):
        vector = " ".join(map(str, cls.right_lane_vector))
        for member in cls.sorted_members():
            touches = " ".join(map(str, simulate(member).touch_positions))
            rows.append((index, str(member), touches, vector, cls.size))
    return Grid("Color-blind equivalence classes", header, tuple(rows))
