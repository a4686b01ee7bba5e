"""Symmetric-group characters by recursive border-strip removal.

``character(shape, cycle_type)`` peels one border strip per cycle, largest
cycles first, weighting each removal by (-1)^height with height = rows
occupied minus one.  Removals are found on the beta-number encoding
(first-column hook lengths), where stripping a hook of length r is just
"subtract r from one beta number without colliding with another".
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .partitions import ConjugacyClass, YoungDiagram

__all__ = ["z_order", "character", "dimension"]


def z_order(mu: ConjugacyClass) -> int:
    """Centralizer order of a permutation of cycle type mu: prod j^kj * kj!."""
    out = 1
    for j, k in mu.multiplicities.items():
        out *= j**k * factorial(k)
    return out


def _beta(parts: tuple[int, ...]) -> list[int]:
    m = len(parts)
    return [parts[i] + (m - 1 - i) for i in range(m)]


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    m = len(beta)
    parts = [beta[i] - (m - 1 - i) for i in range(m)]
    return tuple(p for p in parts if p)


def _strip_hooks(parts: tuple[int, ...], r: int):
    """Yield (height, smaller shape) for every removable border strip of size r."""
    beta = _beta(parts)
    present = set(beta)
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in present:
            continue
        height = sum(1 for other in beta if nb < other < b)
        rest = beta[:i] + [nb] + beta[i + 1:]
        yield height, _from_beta(rest)


@cache
def _character_rec(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not parts else 0
    r, rest = cycles[0], cycles[1:]
    total = 0
    for height, smaller in _strip_hooks(parts, r):
        total += (-1) ** height * _character_rec(smaller, rest)
    return total


def character(shape: YoungDiagram, cycle_type: ConjugacyClass) -> int:
    """Irreducible character of shape evaluated on the class of cycle_type."""
    if shape.boxes != cycle_type.weight:
        raise ValueError(
            f"shape has {shape.boxes} boxes but the cycle type has weight {cycle_type.weight}"
        )
    return _character_rec(shape.parts, cycle_type.cycles())


def dimension(shape: YoungDiagram) -> int:
    """Dimension of the irreducible labelled by shape, by the hook-length formula."""
    parts = shape.parts
    cols = shape.transpose().parts
    hooks = 1
    for i, p in enumerate(parts):
        for j in range(p):
            hooks *= (p - j) + (cols[j] - i) - 1
    return factorial(shape.boxes) // hooks
