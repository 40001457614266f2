"""Exact integer results from residue computations (multi-modular / CRT).

A computation whose true integer outputs are bounded by ``B`` in absolute
value is run modulo several primes below ``2**20`` whose product exceeds
``2*B``; Garner's mixed-radix reconstruction then recovers every output
exactly, symmetric around zero.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

PRIME_CEILING = 1 << 20


@lru_cache(maxsize=1)
def _prime_table() -> tuple[int, ...]:
    sieve = np.ones(PRIME_CEILING, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(PRIME_CEILING ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    # largest first: fewer primes per bound
    return tuple(int(x) for x in np.flatnonzero(sieve)[::-1])


def primes_for_bound(bound: int) -> list[int]:
    """Smallest list of table primes whose product exceeds ``2*bound``."""
    target = 2 * max(int(bound), 1)
    chosen: list[int] = []
    product = 1
    for p in _prime_table():
        chosen.append(p)
        product *= p
        if product > target:
            return chosen
    raise OverflowError("bound exceeds the capacity of the prime table")


def residues(values: Sequence[int] | np.ndarray, p: int) -> np.ndarray:
    """Non-negative int64 residues of arbitrary Python integers."""
    arr = np.asarray(values, dtype=object)
    return (arr % p).astype(np.int64)


def crt(residue_arrays: Sequence[np.ndarray], primes: Sequence[int]) -> np.ndarray:
    """Reconstruct symmetric representatives from residues (object array)."""
    if len(residue_arrays) != len(primes):
        raise ValueError("one residue array per prime is required")
    digits: list[np.ndarray] = []
    for j, (r, p) in enumerate(zip(residue_arrays, primes)):
        # value of the partial mixed-radix sum modulo p
        acc = np.zeros_like(r)
        radix = 1
        for i in range(j):
            acc = (acc + radix * digits[i]) % p
            radix = radix * primes[i] % p
        inv = pow(radix, -1, p) if j else 1
        digits.append(((r - acc) % p) * inv % p)
    value = digits[-1].astype(object)
    for i in range(len(digits) - 2, -1, -1):
        value = value * primes[i] + digits[i].astype(object)
    modulus = 1
    for p in primes:
        modulus *= p
    return np.where(value > modulus // 2, value - modulus, value)


def multimodular(run: Callable[[int], np.ndarray], bound: int) -> np.ndarray:
    """Evaluate ``run(p)`` for enough primes and combine the results exactly."""
    ps = primes_for_bound(bound)
    return crt([np.asarray(run(p), dtype=np.int64) for p in ps], ps)
