"""Bivariate (z, q) series and crank tables.

Band ``m`` of a :class:`CrankSeries` is the q-series multiplying ``z^m``.
The crank kernel

    (q^d;q^d)_inf / ((z q^d;q^d)_inf (q^d/z;q^d)_inf)

is built as an explicit product of geometric band factors, so no bivariate
division is ever needed.  Multiplying it by the series of the parts the
residual crank ignores, ``ovr(q) (q^d;q^d)_inf``, gives the residual crank
table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import _kernels
from .modular import multimodular, residues
from .moments import MomentVector
from .series import (
    TruncSeries,
    add,
    etaq,
    make_series,
    mul,
    overpartition_gf,
)

__all__ = [
    "CrankSeries",
    "CrankTable",
    "geom_band_factor",
    "biv_mul",
    "crank_kernel",
    "crank_kernel_by_factors",
    "ordinary_crank_table",
    "residual_prefactor",
    "residual_crank_product",
    "moment_from_table",
]

PRODUCT = "product"
COMBINATORIAL = "combinatorial"
CONVENTIONS = (PRODUCT, COMBINATORIAL)


@dataclass(frozen=True)
class CrankSeries:
    order: int
    bands: Mapping[int, TruncSeries] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, s in self.bands.items():
            if s.order != self.order:
                raise ValueError(f"band {m} has order {s.order}, expected {self.order}")
            if any(s.coeffs):
                if abs(m) > self.order:
                    raise ValueError(f"band {m} exceeds the order {self.order}")
                clean[m] = s
        object.__setattr__(self, "bands", dict(sorted(clean.items())))

    def band(self, m: int) -> TruncSeries:
        return self.bands.get(m) or make_series([], self.order)

    def coeff(self, m: int, n: int) -> int:
        s = self.bands.get(m)
        return s.coeffs[n] if s is not None else 0

    def at_z_one(self) -> TruncSeries:
        total = make_series([], self.order)
        for s in self.bands.values():
            total = add(total, s)
        return total


def geom_band_factor(direction: int, e: int, order: int) -> CrankSeries:
    """Expansion of ``1/(1 - z^direction q^e)``."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if e < 1:
        raise ValueError("exponent must be positive")
    bands = {}
    for t in range(order // e + 1):
        c = [0] * (order + 1)
        c[t * e] = 1
        bands[t * direction] = TruncSeries(order, tuple(c))
    return CrankSeries(order, bands)


def biv_mul(a: CrankSeries, b: CrankSeries) -> CrankSeries:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    out: dict[int, TruncSeries] = {}
    for m1, s1 in a.bands.items():
        for m2, s2 in b.bands.items():
            prod = mul(s1, s2)
            m = m1 + m2
            out[m] = add(out[m], prod) if m in out else prod
    return CrankSeries(a.order, out)


def crank_kernel_by_factors(d: int, order: int) -> CrankSeries:
    """The crank kernel multiplied out factor by factor with :func:`biv_mul`.

    Slow (Python integers throughout); kept as the reference route for
    :func:`crank_kernel`.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    acc = CrankSeries(order, {0: etaq(d, order)})
    for direction in (1, -1):
        for e in range(d, order + 1, d):
            acc = biv_mul(acc, geom_band_factor(direction, e, order))
    return acc


def _magnitude_bound(d: int, order: int, post: TruncSeries | None) -> int:
    """Bound on every |entry| of ``post * kernel`` (a priori, not from the result).

    Before the eta factor the kernel is non-negative and sums over z to
    ``1/(q^d;q^d)^2``, so each entry is dominated by the coefficients of
    ``|post| * |eta| * 1/(q^d;q^d)^2``.
    """
    c = [0] * (order + 1)
    c[0] = 1
    for _ in range(2):
        for e in range(d, order + 1, d):
            for n in range(e, order + 1):
                c[n] += c[n - e]
    acc = mul(TruncSeries(order, tuple(c)), TruncSeries(order, tuple(map(abs, etaq(d, order).coeffs))))
    if post is not None:
        acc = mul(acc, TruncSeries(order, tuple(map(abs, post.coeffs))))
    return max(acc.coeffs)


def _kernel_grid(d: int, order: int, post: TruncSeries | None, backend: str | None) -> np.ndarray:
    """Exact kernel (times ``post`` if given) as an object array ``[n, m + order]``."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    eta = etaq(d, order)
    bound = _magnitude_bound(d, order, post)

    def run(p: int) -> np.ndarray:
        t = _kernels.crank_kernel_mod(order, d, residues(eta.coeffs, p), p, backend)
        if post is not None:
            t = _kernels.bands_conv_mod(t, residues(post.coeffs, p), p, backend)
        return t

    return multimodular(run, bound)


def _grid_to_series(grid: np.ndarray, order: int) -> CrankSeries:
    bands = {}
    for col in range(2 * order + 1):
        column = grid[:, col]
        if any(column):
            bands[col - order] = TruncSeries(order, tuple(int(x) for x in column))
    return CrankSeries(order, bands)


def crank_kernel(d: int, order: int, backend: str | None = None) -> CrankSeries:
    """``(q^d;q^d)_inf / ((z q^d, q^d/z; q^d)_inf)`` truncated at ``order``."""
    return _grid_to_series(_kernel_grid(d, order, None, backend), order)


@dataclass(frozen=True, eq=False)
class CrankTable:
    """Counts ``M[d](m, n)`` for ``|m| <= order``, ``0 <= n <= order``.

    ``entries`` is an object array indexed ``[m + order, n]``.  ``kind`` is
    ``"overpartition"`` for residual crank tables and ``"partition"`` for the
    ordinary crank table.
    """

    d: int
    order: int
    entries: np.ndarray
    convention: str = PRODUCT
    kind: str = "overpartition"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.entries.shape != (2 * self.order + 1, self.order + 1):
            raise ValueError("entries shape does not match the order")

    def entry(self, m: int, n: int) -> int:
        if abs(m) > self.order or not 0 <= n <= self.order:
            return 0
        return int(self.entries[m + self.order, n])

    def column(self, n: int) -> dict[int, int]:
        return {m: self.entry(m, n) for m in range(-n, n + 1)}

    def column_sums(self) -> list[int]:
        return [int(sum(self.entries[:, n])) for n in range(self.order + 1)]

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries[::-1]))

    def asymmetries(self) -> list[tuple[int, int]]:
        """(m, n) with m > 0 and ``entry(m, n) != entry(-m, n)``."""
        return [(m, n) for n in range(self.order + 1) for m in range(1, n + 1)
                if self.entry(m, n) != self.entry(-m, n)]

    def differences(self, other: CrankTable) -> list[tuple[int, int, int, int]]:
        """(m, n, self, other) for every differing entry, in (n, m) order."""
        if self.order != other.order:
            raise ValueError("order mismatch")
        out = []
        for n in range(self.order + 1):
            for m in range(-n, n + 1):
                a, b = self.entry(m, n), other.entry(m, n)
                if a != b:
                    out.append((m, n, a, b))
        return out

    def __eq__(self, other):
        if not isinstance(other, CrankTable):
            return NotImplemented
        return (self.d, self.order, self.kind) == (other.d, other.order, other.kind) \
            and np.array_equal(self.entries, other.entries)


def residual_prefactor(d: int, order: int) -> TruncSeries:
    """``(-q;q)_inf (q^d;q^d)_inf / (q;q)_inf``: the parts that never reach the crank.

    These are the overlined parts and the parts not divisible by ``d``.
    """
    return mul(overpartition_gf(order), etaq(d, order))


def residual_crank_product(d: int, order: int, backend: str | None = None) -> CrankTable:
    """Table of ``M[d](m, n)``, the ``z^m q^n`` coefficients of

        ovr(q) (q^d, q^d; q^d)_inf / (z q^d, q^d/z; q^d)_inf

    computed as the residual prefactor times the crank kernel.
    """
    grid = _kernel_grid(d, order, residual_prefactor(d, order), backend)
    return CrankTable(d, order, np.ascontiguousarray(grid.T), PRODUCT)


def ordinary_crank_table(order: int, backend: str | None = None) -> CrankTable:
    """Crank counts ``M(m, n)`` of ordinary partitions (the d = 1 kernel alone)."""
    grid = _kernel_grid(1, order, None, backend)
    return CrankTable(1, order, np.ascontiguousarray(grid.T), PRODUCT, kind="partition")


def moment_from_table(t: CrankTable, k: int) -> MomentVector:
    """``n -> sum_{m >= 1} m^k M(m, n)``."""
    if k < 1:
        raise ValueError("k must be positive")
    weights = np.array([m ** k for m in range(1, t.order + 1)], dtype=object)
    values = tuple(int(np.dot(weights, t.entries[t.order + 1:, n])) if t.order else 0
                   for n in range(t.order + 1))
    return MomentVector(t.d, k, "crank", t.order, values)
