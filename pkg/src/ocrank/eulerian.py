"""Eulerian polynomials ``A_k(t) = sum_i A[k, i] t^i``."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import TruncSeries

__all__ = ["EulerianTriangle", "eulerian_triangle", "eulerian_row", "eulerian_eval"]


@dataclass(frozen=True)
class EulerianTriangle:
    kmax: int
    rows: tuple[tuple[int, ...], ...]  # rows[k - 1] = (A[k,0], ..., A[k,k-1])

    def row(self, k: int) -> tuple[int, ...]:
        if not 1 <= k <= self.kmax:
            raise IndexError(f"row {k} outside 1..{self.kmax}")
        return self.rows[k - 1]

    def __getitem__(self, ki: tuple[int, int]) -> int:
        k, i = ki
        r = self.row(k)
        return r[i] if 0 <= i < k else 0


def eulerian_triangle(kmax: int) -> EulerianTriangle:
    """Rows 1..kmax from ``A[k,i] = (i+1) A[k-1,i] + (k-i) A[k-1,i-1]``, ``A_1 = [1]``."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    rows = [(1,)]
    for k in range(2, kmax + 1):
        prev = rows[-1]

        def at(i):
            return prev[i] if 0 <= i < k - 1 else 0

        rows.append(tuple((i + 1) * at(i) + (k - i) * at(i - 1) for i in range(k)))
    return EulerianTriangle(kmax, tuple(rows))


@lru_cache(maxsize=None)
def eulerian_row(k: int) -> tuple[int, ...]:
    return eulerian_triangle(k).row(k)


def eulerian_eval(k: int, n: int, order: int) -> TruncSeries:
    """``A_k(q^n)`` as a truncated series."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    out = [0] * (order + 1)
    for i, a in enumerate(eulerian_row(k)):
        if i * n > order:
            break
        out[i * n] = a
    return TruncSeries(order, tuple(out))
