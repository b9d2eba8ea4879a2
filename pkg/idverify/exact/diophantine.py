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
"""Exhaustive integer searches with exact arithmetic.

Every search is complete within its bound and returns its solutions in
ascending order, so a larger bound yields a superset that agrees on the
smaller range.
"""

import enum
import logging
import math
import typing

import numpy as np

from idverify import exceptions
from idverify.exact import primes

logger = logging.getLogger(__name__)

# primes p <= q tried for p^(2a) + q^(2b) = (2c + 1)^2
POW_SQUARE_PRIMES = 50

Solution = typing.Union[int, typing.Tuple[int, ...]]


class SearchKind(str, enum.Enum):
    FACTORIAL_POWER = "factorial_power_2117"
    POW23_SQUARE = "pow23_square_4803"
    QUINTUPLET = "quintuplet_108E"
    PAIR = "pair_4855"
    CUBE_SQUARE = "cube_square_4811"
    NORM = "norm_1447"


CAPS = {
    SearchKind.FACTORIAL_POWER: 300,
    SearchKind.POW23_SQUARE: 40,
    SearchKind.QUINTUPLET: primes.MAX_N - 14,
    SearchKind.PAIR: 300,
    SearchKind.CUBE_SQUARE: 10**12,
    SearchKind.NORM: 80,
}


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def factorial_power(bound: int) -> typing.List[Solution]:
    """(n, m) with (m + 1)^n = m! + 1 and 1 <= n, m <= bound."""
    found: typing.List[Solution] = []
    fact = 1
    for m in range(1, bound + 1):
        fact *= m
        target, power, n = fact + 1, m + 1, 1
        while power < target and n < bound:
            power *= m + 1
            n += 1
        if power == target:
            found.append((n, m))
    return sorted(found)


def pow_square(bound: int) -> typing.List[Solution]:
    """(a, b, c) with p^(2a) + q^(2b) = (2c + 1)^2 for primes p <= q, 0 <= a, b <= bound."""
    candidates = primes.primes_upto(POW_SQUARE_PRIMES)
    found = set()
    for i, p in enumerate(candidates):
        for q in candidates[i:]:
            for a in range(bound + 1):
                for b in range(bound + 1):
                    total = p ** (2 * a) + q ** (2 * b)
                    root = math.isqrt(total)
                    if root * root == total and root % 2 == 1:
                        logger.debug("%d^%d + %d^%d = %d^2", p, 2 * a, q, 2 * b, root)
                        found.add((a, b, (root - 1) // 2))
    return sorted(found)


def quintuplet(bound: int) -> typing.List[Solution]:
    """n <= bound with n, n+2, n+6, n+8, n+14 all prime."""
    mask = primes.prime_mask(bound + 14)
    n = np.arange(bound + 1)
    hits = mask[n] & mask[n + 2] & mask[n + 6] & mask[n + 8] & mask[n + 14]
    return [int(k) for k in np.flatnonzero(hits)]


def pair(bound: int) -> typing.List[Solution]:
    """(a, b) with a^b - b^a = a - b and 1 <= a, b <= bound."""
    return [
        (a, b)
        for a in range(1, bound + 1)
        for b in range(1, bound + 1)
        if a**b - b**a == a - b
    ]


def pair_families(bound: int) -> typing.List[Solution]:
    """(1, v), (u, 1), (t, t), (2, 3) and (3, 2) cut to the bound."""
    family = {(1, v) for v in range(1, bound + 1)}
    family |= {(u, 1) for u in range(1, bound + 1)}
    family |= {(t, t) for t in range(1, bound + 1)}
    family |= {s for s in ((2, 3), (3, 2)) if max(s) <= bound}
    return sorted(family)


def cube_square(bound: int) -> typing.List[Solution]:
    """1 <= n <= bound with n^3 + 1 and n + 2 both perfect squares."""
    found: typing.List[Solution] = []
    k = 2
    while k * k - 2 <= bound:
        n = k * k - 2
        if _is_square(n**3 + 1):
            found.append(n)
        k += 1
    return found


def norm(bound: int) -> typing.List[Solution]:
    """(n, m) in [0, bound]^2 with (20 + 24 sqrt 2)^n = (24 + 20 sqrt 2)^m in Z[sqrt 2]."""

    def powers(a: int, b: int) -> typing.Dict[typing.Tuple[int, int], int]:
        out, x, y = {}, 1, 0
        for e in range(bound + 1):
            out[(x, y)] = e
            x, y = x * a + 2 * y * b, x * b + y * a
        return out

    left = powers(20, 24)
    right = powers(24, 20)
    return sorted((left[key], right[key]) for key in left.keys() & right.keys())


_SEARCHES: typing.Dict[SearchKind, typing.Callable[[int], typing.List[Solution]]] = {
    SearchKind.FACTORIAL_POWER: factorial_power,
    SearchKind.POW23_SQUARE: pow_square,
    SearchKind.QUINTUPLET: quintuplet,
    SearchKind.PAIR: pair,
    SearchKind.CUBE_SQUARE: cube_square,
    SearchKind.NORM: norm,
}


def search_diophantine(kind: typing.Union[str, SearchKind], bound: int) -> typing.List[Solution]:
    try:
        kind = SearchKind(kind)
    except ValueError as exc:
        raise exceptions.ValidationError(f"unknown search kind {kind!r}") from exc
    if bound < 0:
        raise exceptions.ValidationError(f"bound must be non-negative, got {bound}")
    if bound > CAPS[kind]:
        raise exceptions.ValidationError(f"{kind.value}: bound {bound} exceeds cap {CAPS[kind]}")

    solutions = _SEARCHES[kind](bound)
    logger.debug("%s up to %d: %d solutions", kind.value, bound, len(solutions))
    return solutions
