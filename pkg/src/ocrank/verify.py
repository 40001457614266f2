"""Executable checks of the residual crank identities and inequalities.

Each ``verify_*`` function returns a :class:`VerificationReport`.  Moment
checks run on the generating series; the enumeration oracle is only used
below its cap.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, NamedTuple

from .bivariate import (
    COMBINATORIAL,
    PRODUCT,
    ordinary_crank_table,
    residual_crank_product,
)
from .enumeration import anomalous_count, crank_table_enum
from .moments import (
    crank_moment_series,
    h_injection_check,
    h_series,
    rank_moment_series,
)
from .series import overpartition_gf, partition_gf

__all__ = [
    "Witness",
    "VerificationReport",
    "GapReport",
    "verify_lemma_product",
    "verify_convention_diff",
    "verify_table_invariants",
    "verify_moment_routes",
    "verify_theorem1",
    "verify_theorem2",
    "verify_lemma_h",
    "verify_mirror",
    "verify_ramanujan",
    "rank_crank_gap",
    "verify_gap",
    "verify_lrs",
    "verify_rank_halving",
    "run_suite",
]

PASS, FAIL = "pass", "fail"


class Witness(NamedTuple):
    d: int | None
    k: int | None
    n: int | None
    m: int | None
    lhs: int | None
    rhs: int | None


@dataclass
class VerificationReport:
    name: str
    params: dict[str, Any]
    status: str
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        def enc(x):
            return None if x is None else str(x)

        return {
            "name": self.name,
            "params": {key: enc(v) for key, v in self.params.items()},
            "status": self.status,
            "witnesses": [{f: enc(v) for f, v in w._asdict().items()} for w in self.witnesses],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        def dec(x):
            if x is None:
                return None
            try:
                return int(x)
            except ValueError:
                return x

        return cls(
            name=data["name"],
            params={key: dec(v) for key, v in data["params"].items()},
            status=data["status"],
            witnesses=[Witness(**{f: dec(v) for f, v in w.items()}) for w in data["witnesses"]],
            notes=list(data["notes"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _report(name, params, failures, notes=()) -> VerificationReport:
    return VerificationReport(name, dict(params), FAIL if failures else PASS, list(failures), list(notes))


@lru_cache(maxsize=4)
def _ovr(order: int):
    return overpartition_gf(order)


@lru_cache(maxsize=256)
def _crank_moments(d: int, k: int, order: int) -> tuple[int, ...]:
    return crank_moment_series(d, k, order, _ovr(order)).values


@lru_cache(maxsize=64)
def _rank_moments(d: int, k: int, order: int) -> tuple[int, ...]:
    return rank_moment_series(d, k, order, _ovr(order)).values


@lru_cache(maxsize=16)
def _product_table(d: int, order: int):
    return residual_crank_product(d, order)


# -- tables ------------------------------------------------------------------

def verify_lemma_product(dmax: int, order: int, convention: str = PRODUCT,
                         dmin: int = 1) -> VerificationReport:
    """Product table against the enumeration table, entry for entry."""
    failures = []
    for d in range(dmin, dmax + 1):
        series = _product_table(d, order)
        enum = crank_table_enum(d, order, convention)
        failures += [Witness(d, None, n, m, a, b) for m, n, a, b in series.differences(enum)]
    return _report("lemma_product", {"dmin": dmin, "dmax": dmax, "nmax": order,
                                     "convention": convention}, failures)


def verify_convention_diff(dmax: int, order: int) -> VerificationReport:
    """Product minus combinatorial table is +c at m=1 and -c at m=0.

    ``c`` counts the overpartitions of n whose residual part is the single
    part (1), counted independently of both tables.
    """
    failures = []
    for d in range(1, dmax + 1):
        series = _product_table(d, order)
        comb = crank_table_enum(d, order, COMBINATORIAL)
        for n in range(order + 1):
            c = anomalous_count(d, n)
            for m in range(-n, n + 1):
                want = c if m == 1 else -c if m == 0 else 0
                got = series.entry(m, n) - comb.entry(m, n)
                if got != want:
                    failures.append(Witness(d, None, n, m, got, want))
    return _report("convention_diff", {"dmax": dmax, "nmax": order}, failures)


def verify_table_invariants(dmax: int, order: int) -> VerificationReport:
    """Column sums are overpartition counts; off-centre entries are non-negative."""
    ovr = _ovr(order)
    failures = []
    for d in range(1, dmax + 1):
        t = _product_table(d, order)
        for n, s in enumerate(t.column_sums()):
            if s != ovr[n]:
                failures.append(Witness(d, None, n, None, s, ovr[n]))
        for n in range(order + 1):
            for m, v in t.column(n).items():
                if m != 0 and v < 0:
                    failures.append(Witness(d, None, n, m, v, 0))
    return _report("table_invariants", {"dmax": dmax, "nmax": order}, failures)


def verify_mirror(dmax: int, order: int) -> VerificationReport:
    """``M(m, n) = M(-m, n)`` for every residual table and the ordinary one."""
    failures = []
    tables = [(d, _product_table(d, order)) for d in range(1, dmax + 1)]
    tables.append((0, ordinary_crank_table(order)))
    for d, t in tables:
        for m, n in t.asymmetries():
            failures.append(Witness(d, None, n, m, t.entry(m, n), t.entry(-m, n)))
    return _report("mirror", {"dmax": dmax, "nmax": order}, failures,
                   ["d=0 denotes the ordinary partition crank table"])


def verify_ramanujan(order: int) -> VerificationReport:
    """Crank residues mod 11 split p(11n+6) into eleven equal classes."""
    t = ordinary_crank_table(order)
    p = partition_gf(order)
    failures, notes = [], []
    size = 6
    while size <= order:
        classes = [0] * 11
        for m, v in t.column(size).items():
            classes[m % 11] += v
        want, rem = divmod(p[size], 11)
        if rem:
            failures.append(Witness(None, None, size, None, p[size], 0))
        for r, got in enumerate(classes):
            if got != want:
                failures.append(Witness(None, None, size, r, got, want))
        notes.append(f"n={size}: p(n)={p[size]}, each class {classes[0]}")
        size += 11
    return _report("ramanujan", {"nmax": order}, failures, notes)


# -- moments -----------------------------------------------------------------

def verify_moment_routes(dmax: int, kmax: int, order: int) -> VerificationReport:
    """Moments from the product table equal the moment series."""
    from .bivariate import moment_from_table

    failures = []
    for d in range(1, dmax + 1):
        t = _product_table(d, order)
        for k in range(1, kmax + 1):
            a = moment_from_table(t, k).values
            b = _crank_moments(d, k, order)
            failures += [Witness(d, k, n, None, x, y) for n, (x, y) in enumerate(zip(a, b)) if x != y]
    return _report("moment_routes", {"dmax": dmax, "kmax": kmax, "nmax": order}, failures)


def verify_theorem1(dmax: int, kmax: int, order: int) -> VerificationReport:
    """``M[d+1]_k^+(n) <= M[d]_k^+(n)``, equal (and zero) exactly when n < d.

    Also checks the convolution form: with ``h_k = sum b_j q^j``,
    ``sum_{i+(d+1)j=n} pbar(i) b_j <= sum_{i+j+dj=n} pbar(i+j) b_j``, the
    left side being the (d+1) moment and the right side (where ``i >= 0``
    caps j at n/(d+1)) a partial sum of the d moment.
    """
    ovr = _ovr(order)
    failures = []
    for k in range(1, kmax + 1):
        b = h_series(k, order).coeffs
        for d in range(1, dmax + 1):
            hi, lo = _crank_moments(d, k, order), _crank_moments(d + 1, k, order)
            for n in range(order + 1):
                x, y = lo[n], hi[n]
                if x > y:
                    failures.append(Witness(d, k, n, None, x, y))
                if (x == y) != (n < d) or (y == 0) != (n < d):
                    failures.append(Witness(d, k, n, None, x, y))
                left = sum(ovr[n - (d + 1) * j] * b[j] for j in range(n // (d + 1) + 1))
                right = sum(ovr[n - d * j] * b[j] for j in range(n // (d + 1) + 1))
                if left != x or not left <= right <= y:
                    failures.append(Witness(d, k, n, -1, left, right))
    return _report("theorem1", {"dmax": dmax, "kmax": kmax, "nmax": order}, failures,
                   ["m=-1 marks a failure of the convolution form"])


def verify_theorem2(dmax: int, kmax: int, order: int) -> VerificationReport:
    """``M[d]_k^+(n) <= M[d]_{k+1}^+(n)``, equal exactly when n < 2d.

    On ``d <= n < 2d`` the moment is ``pbar(n - d)`` whatever k is.
    """
    ovr = _ovr(order)
    failures = []
    for d in range(1, dmax + 1):
        for k in range(1, kmax + 1):
            a, b = _crank_moments(d, k, order), _crank_moments(d, k + 1, order)
            for n in range(order + 1):
                x, y = a[n], b[n]
                if x > y or (x == y) != (n < 2 * d):
                    failures.append(Witness(d, k, n, None, x, y))
                if d <= n < 2 * d and (x != ovr[n - d] or y != ovr[n - d]):
                    failures.append(Witness(d, k, n, 1, x, ovr[n - d]))
    return _report("theorem2", {"dmax": dmax, "kmax": kmax, "nmax": order}, failures,
                   ["m=1 marks a plateau failure"])


def verify_lemma_h(kmax: int, order: int, injection_kmax: int | None = None,
                   injection_order: int | None = None) -> VerificationReport:
    """h_k has non-negative coefficients, and the term pairing explains why."""
    failures, notes = [], []
    for k in range(1, kmax + 1):
        for n, c in enumerate(h_series(k, order).coeffs):
            if c < 0:
                failures.append(Witness(None, k, n, None, c, 0))
    ik = kmax if injection_kmax is None else injection_kmax
    io = order if injection_order is None else injection_order
    for k in range(1, ik + 1):
        rep = h_injection_check(k, io)
        notes.append(f"k={k}: {rep.negative_terms} negative terms paired into "
                     f"{rep.positive_terms} positive ones, {len(rep.violations)} violations")
        for kind, term, detail in rep.violations:
            failures.append(Witness(None, k, None, None, None, None))
            notes.append(f"k={k} {kind}: {term} {detail}")
    return _report("lemma_h", {"kmax": kmax, "nmax": order, "injection_kmax": ik,
                               "injection_nmax": io}, failures, notes)


@dataclass(frozen=True)
class GapReport:
    d: int
    order: int
    crank: tuple[int, ...]
    rank: tuple[int, ...]
    first_negative: tuple[int, int] | None  # (n, difference)

    @property
    def differences(self) -> tuple[int, ...]:
        return tuple(c - r for c, r in zip(self.crank, self.rank))


def rank_crank_gap(d: int, order: int) -> GapReport:
    """First-moment differences ``M[d]_1^+(n) - N[d]_1^+(n)``."""
    c, r = _crank_moments(d, 1, order), _rank_moments(d, 1, order)
    first = next(((n, x - y) for n, (x, y) in enumerate(zip(c, r)) if x < y), None)
    return GapReport(d, order, c, r, first)


def verify_gap(dmax: int, order: int) -> VerificationReport:
    """Crank minus rank first moments stay non-negative for d = 1, 2.

    For ``d > 2`` the first negative difference is recorded as a note.
    """
    failures, notes = [], []
    for d in range(1, dmax + 1):
        g = rank_crank_gap(d, order)
        if d <= 2 and g.first_negative is not None:
            n, v = g.first_negative
            failures.append(Witness(d, 1, n, None, g.crank[n], g.rank[n]))
        elif d > 2:
            notes.append(f"d={d}: first negative difference "
                         + (f"{g.first_negative[1]} at n={g.first_negative[0]}"
                            if g.first_negative else "none"))
    return _report("gap", {"dmax": dmax, "nmax": order}, failures, notes)


def verify_lrs(order: int) -> VerificationReport:
    """``M[2]_1^+(n) < M[1]_1^+(n)`` for every 2 <= n <= order."""
    one, two = _crank_moments(1, 1, order), _crank_moments(2, 1, order)
    failures = [Witness(2, 1, n, None, two[n], one[n])
                for n in range(2, order + 1) if not two[n] < one[n]]
    notes = []
    if order >= 1:
        notes.append(f"n=1 excluded: M[2]={two[1]}, M[1]={one[1]}")
    return _report("lrs", {"nmax": order}, failures, notes)


def verify_rank_halving(dmax: int, kmax: int, order: int) -> VerificationReport:
    """Empirical check of ``N[2d]_k^+(n) <= N[d]_k^+(n)``; not a proved statement."""
    failures = []
    for d in range(1, dmax + 1):
        for k in range(1, kmax + 1):
            a, b = _rank_moments(2 * d, k, order), _rank_moments(d, k, order)
            failures += [Witness(d, k, n, None, x, y) for n, (x, y) in enumerate(zip(a, b)) if x > y]
    return _report("rank_halving", {"dmax": dmax, "kmax": kmax, "nmax": order}, failures,
                   ["empirical only"])


def run_suite(dmax: int = 4, kmax: int = 4, order: int = 30,
              enum_cap: int = 20) -> list[VerificationReport]:
    """The full battery at the given ranges; enumeration stops at ``enum_cap``."""
    small = min(order, enum_cap)
    return [
        verify_lemma_product(dmax, small),
        verify_convention_diff(dmax, small),
        verify_table_invariants(dmax, order),
        verify_mirror(dmax, order),
        verify_moment_routes(dmax, kmax, order),
        verify_theorem1(dmax, kmax, order),
        verify_theorem2(dmax, kmax, order),
        verify_lemma_h(kmax, order),
        verify_ramanujan(order),
        verify_lrs(order),
        verify_gap(max(dmax, 3), order),
        verify_rank_halving(min(dmax, 3), min(kmax, 3), order),
    ]
