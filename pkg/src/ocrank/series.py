"""Truncated power series in q with exact integer coefficients.

A :class:`TruncSeries` of order ``N`` stores the coefficients of
``q^0 .. q^N``.  Series of different orders never mix: combining them is a
usage error rather than a silent re-truncation.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .modular import multimodular, residues

__all__ = [
    "TruncSeries",
    "make_series",
    "add",
    "sub",
    "neg",
    "scale",
    "shift",
    "mul",
    "mul_reference",
    "invert",
    "substitute_power",
    "inv_one_minus_pow",
    "etaq",
    "neg_qpoch",
    "partition_gf",
    "overpartition_gf",
]

# below this many non-zero terms in the sparser factor, the direct product wins
SPARSE_CUTOFF = 24


@dataclass(frozen=True)
class TruncSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        return add(self, other)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return sub(self, other)

    def __neg__(self) -> TruncSeries:
        return neg(self)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        return mul(self, other)

    def nonzero(self) -> list[int]:
        return [n for n, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int) -> TruncSeries:
        """Drop every coefficient above ``order`` (``order <= self.order``)."""
        if order > self.order:
            raise ValueError("truncate cannot raise the order")
        return TruncSeries(order, self.coeffs[:order + 1])

    def __repr__(self) -> str:
        terms = [f"{c}*q^{n}" for n, c in enumerate(self.coeffs) if c]
        return f"TruncSeries(order={self.order}, {' + '.join(terms) or '0'})"


def make_series(coeffs: Iterable[int], order: int) -> TruncSeries:
    """Build a series of the given order, zero-filling missing coefficients."""
    cs = [int(c) for c in coeffs]
    if len(cs) > order + 1:
        raise ValueError(f"{len(cs)} coefficients do not fit in order {order}")
    return TruncSeries(order, tuple(cs) + (0,) * (order + 1 - len(cs)))


def _check_orders(a: TruncSeries, b: TruncSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    return TruncSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    return TruncSeries(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: TruncSeries) -> TruncSeries:
    return TruncSeries(a.order, tuple(-x for x in a.coeffs))


def scale(a: TruncSeries, c: int) -> TruncSeries:
    return TruncSeries(a.order, tuple(c * x for x in a.coeffs))


def shift(a: TruncSeries, s: int) -> TruncSeries:
    """Multiply by ``q^s`` (``s >= 0``), truncating at the same order."""
    if s < 0:
        raise ValueError("shift must be non-negative")
    if s > a.order:
        return make_series([], a.order)
    return TruncSeries(a.order, (0,) * s + a.coeffs[:a.order + 1 - s])


def _mul_sparse(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    """Direct product driven by the non-zero terms of ``a``."""
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def mul_reference(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Schoolbook product on Python integers; the exact reference route."""
    _check_orders(a, b)
    return TruncSeries(a.order, tuple(_mul_sparse(a.coeffs, b.coeffs, a.order)))


def _mul_multimodular(a: TruncSeries, b: TruncSeries, backend: str | None) -> tuple[int, ...]:
    bound = (a.order + 1) * max(map(abs, a.coeffs)) * max(map(abs, b.coeffs))
    if bound == 0:
        return (0,) * (a.order + 1)

    def run(p: int) -> np.ndarray:
        return _kernels.conv_mod(residues(a.coeffs, p), residues(b.coeffs, p), p, backend)

    return tuple(int(x) for x in multimodular(run, bound))


def mul(a: TruncSeries, b: TruncSeries, backend: str | None = None) -> TruncSeries:
    """Truncated Cauchy product.

    Sparse operands use the direct product; dense ones go through the
    residue kernels (numba or numpy, see :mod:`ocrank._kernels`).
    """
    _check_orders(a, b)
    na, nb = len(a.nonzero()), len(b.nonzero())
    if min(na, nb) <= SPARSE_CUTOFF:
        x, y = (a, b) if na <= nb else (b, a)
        return TruncSeries(a.order, tuple(_mul_sparse(x.coeffs, y.coeffs, a.order)))
    return TruncSeries(a.order, _mul_multimodular(a, b, backend))


def invert(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse modulo ``q^(N+1)``; needs a unit constant term."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term {a0} is not a unit")
    terms = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    out = [0] * (a.order + 1)
    out[0] = a0
    for n in range(1, a.order + 1):
        s = 0
        for j, c in terms:
            if j > n:
                break
            s += c * out[n - j]
        out[n] = -s * a0
    return TruncSeries(a.order, tuple(out))


def substitute_power(a: TruncSeries, d: int) -> TruncSeries:
    """Replace q by q^d, keeping the order of ``a``."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    out = [0] * (a.order + 1)
    for n in range(a.order // d + 1):
        out[d * n] = a.coeffs[n]
    return TruncSeries(a.order, tuple(out))


def inv_one_minus_pow(n: int, k: int, order: int) -> TruncSeries:
    """``1/(1 - q^n)^k`` truncated at ``order``."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    out = [0] * (order + 1)
    for m in range(order // n + 1):
        out[n * m] = comb(m + k - 1, k - 1)
    return TruncSeries(order, tuple(out))


def etaq(d: int, order: int) -> TruncSeries:
    """The product ``prod_{i>=1} (1 - q^{d i})`` truncated at ``order``."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    c = [0] * (order + 1)
    c[0] = 1
    for e in range(d, order + 1, d):
        for n in range(order, e - 1, -1):
            c[n] -= c[n - e]
    return TruncSeries(order, tuple(c))


def neg_qpoch(order: int) -> TruncSeries:
    """``(-q;q)_inf = prod_{i>=1} (1 + q^i)`` truncated at ``order``."""
    c = [0] * (order + 1)
    c[0] = 1
    for e in range(1, order + 1):
        for n in range(order, e - 1, -1):
            c[n] += c[n - e]
    return TruncSeries(order, tuple(c))


def partition_gf(order: int) -> TruncSeries:
    """``1/(q;q)_inf``: coefficient n is p(n)."""
    return invert(etaq(1, order))


def overpartition_gf(order: int) -> TruncSeries:
    """``(-q;q)_inf / (q;q)_inf``: coefficient n is the overpartition count."""
    return mul(neg_qpoch(order), partition_gf(order))
