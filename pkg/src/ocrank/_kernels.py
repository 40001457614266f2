"""Residue kernels for the multi-modular arithmetic.

Every kernel works on arrays of residues modulo a prime ``p < 2**20``, so a
product of two residues stays below ``2**40`` and a sum of up to ``2**23``
such products cannot overflow int64.  The crank sweep only adds, so its
table is int32.  Exact integers are recovered by
:mod:`ocrank.modular`.

Two implementations exist for each kernel: a numba ``@njit`` one and a pure
numpy one.  The numba path is used when numba imports and the environment
variable ``OCRANK_NO_NUMBA`` is unset (or ``0``).  Both produce identical
residues.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

__all__ = [
    "BACKENDS",
    "available_backends",
    "get_backend",
    "set_backend",
    "conv_mod",
    "crank_kernel_mod",
    "bands_conv_mod",
]


# -- numpy ------------------------------------------------------------------

def _conv_mod_numpy(a, b, p):
    n = a.shape[0]
    return np.convolve(a, b)[:n] % p


def _crank_kernel_mod_numpy(order, d, eta, p):
    width = 2 * order + 1
    t = np.zeros((order + 1, width), dtype=np.int32)
    t[:, order] = eta
    for direction in (1, -1):
        for e in range(d, order + 1, d):
            for n in range(e, order + 1):
                b = n // d
                lo = max(order - b, 1 if direction == 1 else 0)
                hi = min(order + b + 1, width - (0 if direction == 1 else 1))
                if lo >= hi:
                    continue
                row = t[n, lo:hi]
                row += t[n - e, lo - direction:hi - direction]
                row %= p
    return t


def _bands_conv_mod_numpy(t, b, p):
    t = t.astype(np.int64)
    rows = t.shape[0]
    out = np.zeros_like(t)
    for j in np.flatnonzero(b):
        out[j:] += b[j] * t[:rows - j]
    return out % p


# -- numba ------------------------------------------------------------------

if njit is not None:

    @njit(cache=True)
    def _conv_mod_numba(a, b, p):
        n = a.shape[0]
        out = np.zeros(n, dtype=np.int64)
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n - i):
                out[i + j] += ai * b[j]
            # keep the running sums far from overflow
            if i & 1023 == 1023:
                for j in range(i, n):
                    out[j] %= p
        for i in range(n):
            out[i] %= p
        return out

    @njit(cache=True)
    def _sweep_numba(t, order, d, p, shift):
        # multiply by 1/(1 - z^shift q^e) for e = d, 2d, ...: band m of row n
        # gains band m - shift of row n - e
        for e in range(d, order + 1, d):
            for n in range(e, order + 1):
                bs = (n - e) // d
                lo = max(-(n // d), shift - bs) + order
                hi = min(n // d, shift + bs) + order
                dst = t[n]
                src = t[n - e, lo - shift:hi + 1 - shift]
                for c in range(hi + 1 - lo):
                    x = dst[lo + c] + src[c]
                    dst[lo + c] = x - p if x >= p else x

    @njit(cache=True)
    def _crank_kernel_mod_numba(order, d, eta, p):
        t = np.zeros((order + 1, 2 * order + 1), dtype=np.int32)
        for n in range(order + 1):
            t[n, order] = eta[n]
        p32 = np.int32(p)
        _sweep_numba(t, order, d, p32, 1)
        _sweep_numba(t, order, d, p32, -1)
        return t

    @njit(cache=True)
    def _bands_conv_mod_numba(t, b, p):
        rows, cols = t.shape
        out = np.zeros((rows, cols), dtype=np.int64)
        for j in range(rows):
            bj = b[j]
            if bj == 0:
                continue
            for n in range(j, rows):
                dst = out[n]
                src = t[n - j]
                for c in range(cols):
                    dst[c] += bj * src[c]
            if j & 1023 == 1023:
                for n in range(rows):
                    for c in range(cols):
                        out[n, c] %= p
        for n in range(rows):
            for c in range(cols):
                out[n, c] %= p
        return out


BACKENDS = {
    "numpy": (_conv_mod_numpy, _crank_kernel_mod_numpy, _bands_conv_mod_numpy),
}
if njit is not None:
    BACKENDS["numba"] = (_conv_mod_numba, _crank_kernel_mod_numba, _bands_conv_mod_numba)


def _default_backend() -> str:
    if os.environ.get("OCRANK_NO_NUMBA", "0") not in ("", "0") or "numba" not in BACKENDS:
        return "numpy"
    return "numba"


_active = _default_backend()


def available_backends() -> list[str]:
    return sorted(BACKENDS)


def get_backend() -> str:
    return _active


def set_backend(name: str) -> str:
    """Select the kernel backend; returns the previously active one."""
    global _active
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {available_backends()}")
    previous, _active = _active, name
    return previous


def conv_mod(a: np.ndarray, b: np.ndarray, p: int, backend: str | None = None) -> np.ndarray:
    """Truncated product of two residue vectors of equal length."""
    return BACKENDS[backend or _active][0](a, b, p)


def crank_kernel_mod(order: int, d: int, eta: np.ndarray, p: int,
                     backend: str | None = None) -> np.ndarray:
    """Residues of ``eta * prod_j 1/((1 - z q^{dj})(1 - q^{dj}/z))``.

    ``eta`` holds the residues of the q-series placed in the z^0 band before
    the geometric factors are swept in.  Result is indexed ``[n, m + order]``.
    """
    return BACKENDS[backend or _active][1](order, d, eta, p)


def bands_conv_mod(t: np.ndarray, b: np.ndarray, p: int, backend: str | None = None) -> np.ndarray:
    """Multiply every z-band (column) of ``t`` by the q-series ``b``."""
    return BACKENDS[backend or _active][2](t, b, p)
