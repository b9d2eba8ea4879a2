# Copyright 2023 Julian Knutsen
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the “Software”), to deal in
# the Software without restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the
# Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
"""Sieve of Eratosthenes on numpy boolean arrays."""

import logging
import math
import typing

import numpy as np

from idverify import exceptions

logger = logging.getLogger(__name__)

MAX_N = 10**8


def _check_cap(n: int):
    if n > MAX_N:
        raise exceptions.ValidationError(f"sieve limit {n} exceeds cap {MAX_N}")


def prime_mask(n: int) -> np.ndarray:
    """mask[k] is True iff k is prime, for 0 <= k <= n."""
    _check_cap(n)
    mask = np.ones(max(n + 1, 2), dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask[: n + 1] if n >= 0 else mask[:0]


def _segmented(n: int, block: int) -> typing.Iterator[int]:
    base = np.flatnonzero(prime_mask(math.isqrt(n)))
    for lo in range(2, n + 1, block):
        hi = min(lo + block, n + 1)
        segment = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, (lo + p - 1) // p * p)
            segment[start - lo :: p] = False
        yield from (lo + int(k) for k in np.flatnonzero(segment))


def primes_upto(n: int, block: typing.Optional[int] = None) -> list[int]:
    """Ascending primes <= n; with block set the range is sieved in segments of that size."""
    _check_cap(n)
    if n < 2:
        return []
    if block is None:
        primes = [int(p) for p in np.flatnonzero(prime_mask(n))]
    else:
        if block < 1:
            raise exceptions.ValidationError(f"block must be positive, got {block}")
        primes = list(_segmented(n, block))
    logger.debug("%d primes up to %d", len(primes), n)
    return primes
