"""Wall-clock timings for the series kernels, per backend."""
from __future__ import annotations

import time

from . import _kernels
from .bivariate import moment_from_table, residual_crank_product
from .moments import crank_moment_series
from .series import mul, mul_reference, neg_qpoch, overpartition_gf, partition_gf


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return time.perf_counter() - start, result


def warm_up() -> None:
    """Trigger numba compilation so timings exclude the JIT."""
    for backend in _kernels.available_backends():
        residual_crank_product(1, 8, backend=backend)
        s = overpartition_gf(64)
        mul(s, s, backend=backend)


def run_benchmarks(d: int = 1, k: int = 2, order: int = 1000,
                   table_order: int = 100) -> list[dict]:
    """Rows ``{task, backend, nmax, seconds}`` in a fixed task order."""
    warm_up()
    rows = []

    def add(task, backend, nmax, seconds):
        rows.append({"task": task, "backend": backend, "nmax": nmax, "seconds": seconds})

    a, b = neg_qpoch(order), partition_gf(order)
    secs, ref = _timed(mul_reference, a, b)
    add("series_mul", "python", order, secs)
    for backend in _kernels.available_backends():
        secs, got = _timed(mul, a, b, backend=backend)
        if got != ref:
            raise AssertionError(f"{backend} product disagrees with the reference")
        add("series_mul", backend, order, secs)

    previous = _kernels.get_backend()
    try:
        for backend in _kernels.available_backends():
            _kernels.set_backend(backend)
            secs, _ = _timed(overpartition_gf, order)
            add("overpartition_gf", backend, order, secs)
            secs, _ = _timed(crank_moment_series, d, k, order)
            add(f"crank_moments_d{d}_k{k}", backend, order, secs)
            secs, table = _timed(residual_crank_product, d, table_order)
            add(f"product_table_d{d}", backend, table_order, secs)
            secs, _ = _timed(moment_from_table, table, k)
            add(f"table_moments_d{d}_k{k}", backend, table_order, secs)
    finally:
        _kernels.set_backend(previous)
    return rows
