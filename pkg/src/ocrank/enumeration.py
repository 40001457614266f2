"""Brute-force partitions and overpartitions, with their cranks.

This module is the independent oracle for everything the generating series
compute, so it never touches :mod:`ocrank.series`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .bivariate import COMBINATORIAL, CONVENTIONS, PRODUCT, CrankTable

__all__ = [
    "ENUMERATION_CAP",
    "Partition",
    "Overpartition",
    "partitions",
    "strict_partitions",
    "overpartitions",
    "crank",
    "residual_part",
    "residual_crank",
    "crank_table_enum",
    "anomalous_count",
    "pbar",
]

ENUMERATION_CAP = 40


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        ps = tuple(self.parts)
        if any(p < 1 for p in ps):
            raise ValueError(f"parts must be positive: {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be non-increasing: {ps}")
        object.__setattr__(self, "parts", ps)

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class Overpartition:
    """Parts as ``(value, overlined)`` pairs, largest first.

    Among equal values the overlined copy, if any, comes first.
    """

    parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        ps = tuple((int(v), bool(o)) for v, o in self.parts)
        prev = None
        for v, o in ps:
            if v < 1:
                raise ValueError(f"parts must be positive: {ps}")
            if prev is not None:
                if v > prev[0]:
                    raise ValueError(f"parts must be non-increasing: {ps}")
                if o and v == prev[0]:
                    raise ValueError(f"only the first occurrence of {v} may be overlined: {ps}")
            prev = (v, o)
        object.__setattr__(self, "parts", ps)

    @property
    def size(self) -> int:
        return sum(v for v, _ in self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{v}̅" if o else str(v) for v, o in self.parts) + ")"


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _strict(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _strict(n - first, first - 1):
            yield (first,) + rest


def partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` once, parts non-increasing."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for ps in _partitions(n, n):
        yield Partition(ps)


def strict_partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` into distinct parts."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for ps in _strict(n, n):
        yield Partition(ps)


def _merge(over: tuple[int, ...], plain: tuple[int, ...]) -> tuple[tuple[int, bool], ...]:
    out = []
    i = j = 0
    while i < len(over) or j < len(plain):
        # an overlined v goes before the plain copies of v
        if j == len(plain) or (i < len(over) and over[i] >= plain[j]):
            out.append((over[i], True))
            i += 1
        else:
            out.append((plain[j], False))
            j += 1
    return tuple(out)


def _overpartitions(n: int) -> Iterator[tuple[tuple[int, bool], ...]]:
    for j in range(n + 1):
        for over in _strict(j, j):
            for plain in _partitions(n - j, n - j):
                yield _merge(over, plain)


def overpartitions(n: int) -> Iterator[Overpartition]:
    """Every overpartition of ``n`` once.

    Built as (distinct overlined parts) x (ordinary partition of the rest),
    so no deduplication is needed.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for ps in _overpartitions(n):
        yield Overpartition(ps)


def _crank(parts: tuple[int, ...]) -> int:
    if not parts:
        return 0
    ones = parts.count(1)
    if ones == 0:
        return parts[0]
    return sum(1 for p in parts if p > ones) - ones


def crank(p: Partition | tuple[int, ...]) -> int:
    """Andrews-Garvan crank; the empty partition has crank 0."""
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    return _crank(parts)


def _residual(parts, d: int) -> tuple[int, ...]:
    return tuple(v // d for v, o in parts if not o and v % d == 0)


def residual_part(lam: Overpartition, d: int) -> Partition:
    """Non-overlined parts divisible by ``d``, each divided by ``d``."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return Partition(_residual(lam.parts, d))


def residual_crank(lam: Overpartition, d: int) -> int:
    return crank(residual_part(lam, d))


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise ValueError(f"enumeration up to n={order} exceeds the cap {cap}")


def crank_table_enum(d: int, order: int, convention: str = PRODUCT,
                     cap: int = ENUMERATION_CAP) -> CrankTable:
    """Count overpartitions of each n <= order by d-th residual crank.

    Under the product convention an overpartition whose residual part is the
    single part (1) is counted as ``z - 1 + 1/z`` instead of ``1/z``, which
    is what the generating product assigns.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    _check_cap(order, cap)
    entries = np.zeros((2 * order + 1, order + 1), dtype=object)
    for n in range(order + 1):
        for lam in _overpartitions(n):
            res = _residual(lam, d)
            entries[_crank(res) + order, n] += 1
            if convention == PRODUCT and res == (1,):
                entries[1 + order, n] += 1
                entries[order, n] -= 1
    return CrankTable(d, order, entries, convention)


def anomalous_count(d: int, n: int) -> int:
    """Number of overpartitions of ``n`` whose residual part is exactly (1)."""
    return sum(1 for lam in _overpartitions(n) if _residual(lam, d) == (1,))


def pbar(n: int, cap: int = ENUMERATION_CAP) -> int:
    """Number of overpartitions of ``n``, by counting them."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(n, cap)
    return sum(1 for _ in _overpartitions(n))
