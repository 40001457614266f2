"""Positive crank and rank moment series, and the pairing behind h_k >= 0.

    h_k(q) = sum_{n>=1} (-1)^(n+1) q^(n(n+1)/2) A_k(q^n) / (1 - q^n)^k

The crank moments of the d-th residual crank are ``ovr(q) * h_k(q^d)``; the
M_d-rank moments are ``2 ovr(q) sum_n (-1)^(n+1) q^(n^2+dn) A_k(q^dn) /
((1 + q^dn)(1 - q^dn)^k)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .eulerian import eulerian_row
from .series import (
    TruncSeries,
    mul,
    overpartition_gf,
    substitute_power,
)

__all__ = [
    "MomentVector",
    "HTerm",
    "InjectionReport",
    "h_series",
    "crank_moment_series",
    "rank_moment_series",
    "h_exponent",
    "h_pair",
    "h_terms",
    "h_injection_check",
]


@dataclass(frozen=True)
class MomentVector:
    d: int
    k: int
    kind: str  # "crank" or "rank"
    order: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _triangular_terms(order: int, step: int):
    """Yield (n, n(n+1)/2 * step) while the exponent stays within ``order``."""
    n = 1
    while step * n * (n + 1) // 2 <= order:
        yield n, step * n * (n + 1) // 2
        n += 1


def h_series(k: int, order: int) -> TruncSeries:
    """``h_k(q)`` truncated at ``order``."""
    if k < 1:
        raise ValueError("k must be positive")
    row = eulerian_row(k)
    out = [0] * (order + 1)
    for n, tri in _triangular_terms(order, 1):
        sign = 1 if n % 2 else -1
        # A_k(q^n) / (1 - q^n)^k is a series in q^n: sum_j c_j q^(nj)
        top = (order - tri) // n
        geo = [comb(m + k - 1, k - 1) for m in range(top + 1)]
        for j in range(top + 1):
            c = 0
            for i, a in enumerate(row):
                if i > j:
                    break
                c += a * geo[j - i]
            out[tri + n * j] += sign * c
    return TruncSeries(order, tuple(out))


def crank_moment_series(d: int, k: int, order: int, ovr: TruncSeries | None = None) -> MomentVector:
    """``n -> M[d]_k^+(n)`` from ``ovr(q) h_k(q^d)``."""
    if d < 1 or k < 1:
        raise ValueError("d and k must be positive")
    ovr = ovr if ovr is not None else overpartition_gf(order)
    inner = substitute_power(_pad(h_series(k, order // d), order), d)
    return MomentVector(d, k, "crank", order, mul(ovr, inner).coeffs)


def _pad(s: TruncSeries, order: int) -> TruncSeries:
    return TruncSeries(order, s.coeffs + (0,) * (order - s.order))


def _rank_inner(d: int, k: int, order: int) -> TruncSeries:
    row = eulerian_row(k)
    out = [0] * (order + 1)
    n = 1
    while n * n + d * n <= order:
        sign = 1 if n % 2 else -1
        base, step = n * n + d * n, d * n
        top = (order - base) // step
        # 1/(1 + x) = sum (-1)^j x^j, then divide by (1 - x)^k and multiply by A_k(x)
        alt = [(-1) ** j for j in range(top + 1)]
        geo = [sum(alt[j - m] * comb(m + k - 1, k - 1) for m in range(j + 1)) for j in range(top + 1)]
        for j in range(top + 1):
            c = 0
            for i, a in enumerate(row):
                if i > j:
                    break
                c += a * geo[j - i]
            out[base + step * j] += sign * c
        n += 1
    return TruncSeries(order, tuple(out))


def rank_moment_series(d: int, k: int, order: int, ovr: TruncSeries | None = None) -> MomentVector:
    """``n -> N[d]_k^+(n)``, the positive moments of the M_d-rank."""
    if d < 1 or k < 1:
        raise ValueError("d and k must be positive")
    ovr = ovr if ovr is not None else overpartition_gf(order)
    prod = mul(ovr, _rank_inner(d, k, order))
    return MomentVector(d, k, "rank", order, tuple(2 * c for c in prod.coeffs))


@dataclass(frozen=True, order=True)
class HTerm:
    """One summand of the expanded h_k: index ``n = 2^t s`` with ``s`` odd."""

    i: int
    s: int
    m: int
    t: int

    @property
    def positive(self) -> bool:
        return self.t == 0

    def weight(self, k: int) -> int:
        return comb(self.m + k - 1, k - 1) * eulerian_row(k)[self.i]


def h_exponent(term: HTerm) -> int:
    if term.s % 2 == 0 or term.s < 1:
        raise ValueError(f"s must be a positive odd integer, got {term.s}")
    n = (1 << term.t) * term.s
    return (n * n + n) // 2 + term.m * n + term.i * n


def h_pair(term: HTerm) -> HTerm:
    """Map a negative term (t >= 1) to the positive term with the same exponent."""
    if term.t < 1:
        raise ValueError("h_pair takes a negative term (t >= 1)")
    if term.s % 2 == 0:
        raise ValueError(f"s must be odd, got {term.s}")
    p = 1 << term.t
    m2 = ((p * p - 1) * term.s + p - 1) // 2 + (p - 1) * term.i + p * term.m
    return HTerm(term.i, term.s, m2, 0)


def h_terms(k: int, order: int):
    """All HTerms of h_k with exponent at most ``order``."""
    for s in range(1, order + 1, 2):
        t = 0
        while True:
            n = (1 << t) * s
            if (n * n + n) // 2 > order:
                break
            for i in range(k):
                m = 0
                while True:
                    term = HTerm(i, s, m, t)
                    if h_exponent(term) > order:
                        break
                    yield term
                    m += 1
            t += 1


@dataclass
class InjectionReport:
    k: int
    order: int
    positive_terms: int = 0
    negative_terms: int = 0
    violations: list[tuple[str, HTerm, str]] = field(default_factory=list)
    reconstructed: tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


def h_injection_check(k: int, order: int) -> InjectionReport:
    """Check the term pairing that makes h_k coefficientwise non-negative.

    Verifies exponent preservation, injectivity per (i, s), binomial
    domination, and that matched differences plus unmatched positive terms
    rebuild ``h_series(k, order)`` exactly.
    """
    report = InjectionReport(k, order)
    positive: dict[HTerm, int] = {}
    negatives: list[HTerm] = []
    for term in h_terms(k, order):
        if term.positive:
            positive[term] = term.weight(k)
        else:
            negatives.append(term)
    report.positive_terms = len(positive)
    report.negative_terms = len(negatives)

    remaining = dict(positive)
    images: dict[HTerm, HTerm] = {}
    for term in negatives:
        image = h_pair(term)
        e = h_exponent(term)
        if h_exponent(image) != e:
            report.violations.append(("exponent", term, f"{h_exponent(image)} != {e}"))
            continue
        if image in images:
            report.violations.append(("injectivity", term, f"collides with {images[image]}"))
            continue
        images[image] = term
        if image not in positive:
            report.violations.append(("unmatched", term, f"image {image} not enumerated"))
            continue
        big, small = comb(image.m + k - 1, k - 1), comb(term.m + k - 1, k - 1)
        # for k = 1 every binomial is 1: matched terms cancel exactly
        strict = k >= 2
        if image.m <= term.m or big < small or (strict and big == small):
            report.violations.append(("domination", term, f"C({image.m}) = {big} vs C({term.m}) = {small}"))
        remaining[image] -= term.weight(k)

    coeffs = [0] * (order + 1)
    for term, w in remaining.items():
        if w < 0:
            report.violations.append(("negative", term, f"net weight {w}"))
        coeffs[h_exponent(term)] += w
    report.reconstructed = tuple(coeffs)
    expected = h_series(k, order).coeffs
    for n, (got, want) in enumerate(zip(coeffs, expected)):
        if got != want:
            report.violations.append(("reconstruction", HTerm(0, 1, 0, 0), f"q^{n}: {got} != {want}"))
    return report

