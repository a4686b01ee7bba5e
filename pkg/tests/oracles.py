"""Independent oracles the tests check the library against.

Nothing here may call into schurkit: partition counts come from the classic
coin-style dynamic program, enumeration from bounded recursion, transposition
from direct column counting.
"""

from __future__ import annotations

from functools import lru_cache


def dp_partition_counts(limit: int) -> list[int]:
    """p(0)..p(limit) by the bounded-part dynamic program."""
    counts = [1] + [0] * limit
    for part in range(1, limit + 1):
        for total in range(part, limit + 1):
            counts[total] += counts[total - part]
    return counts


@lru_cache(maxsize=None)
def naive_partitions(n: int, max_part: int | None = None) -> frozenset[tuple[int, ...]]:
    """All partitions of n as decreasing tuples, by plain recursion."""
    if max_part is None:
        max_part = n
    if n == 0:
        return frozenset({()})
    out = set()
    for first in range(min(n, max_part), 0, -1):
        for rest in naive_partitions(n - first, first):
            out.add((first,) + rest)
    return frozenset(out)


def grid_transpose(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Column lengths read straight off the box grid."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def boxes_of(parts: tuple[int, ...]) -> set[tuple[int, int]]:
    """The diagram as a set of (row, column) cells, 1-indexed."""
    return {(i + 1, j + 1) for i, p in enumerate(parts) for j in range(p)}
