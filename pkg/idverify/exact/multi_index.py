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
"""The n-th derivative of a composition written over ordered multi-indices.

(f o g)^(n) = sum_j f^(j)(g) * sum_{|k| = n, len(k) = j} C_k^n * prod_i g^(k_i)

where k runs over non-decreasing tuples of positive integers and

C_k^n = n! / (prod_i k_i! * prod_m A_k(m)!)

with A_k(m) the number of entries of k equal to m.
"""

import collections
import dataclasses
import fractions
import logging
import math
import typing

from idverify import exceptions
from idverify.exact import poly

logger = logging.getLogger(__name__)

MAX_CHECK_ORDER = 8


@dataclasses.dataclass(frozen=True)
class MultiIndex:
    parts: typing.Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise exceptions.ValidationError("multi-index needs at least one part")
        if any(p < 1 for p in self.parts):
            raise exceptions.ValidationError(f"parts must be positive: {self.parts}")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise exceptions.ValidationError(f"parts must be non-decreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> typing.Dict[int, int]:
        return dict(collections.Counter(self.parts))

    def coefficient(self) -> int:
        denom = 1
        for p in self.parts:
            denom *= math.factorial(p)
        for count in self.multiplicities().values():
            denom *= math.factorial(count)
        value, rest = divmod(math.factorial(self.size), denom)
        # the count of set partitions with these block sizes is always integral
        assert rest == 0
        return value


def _nondecreasing(n: int, smallest: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _nondecreasing(n - first, first):
            yield (first,) + rest


def multi_indices(n: int) -> typing.List[MultiIndex]:
    if n < 1:
        raise exceptions.ValidationError(f"n must be >= 1, got {n}")
    found = [MultiIndex(parts) for parts in _nondecreasing(n, 1)]
    return sorted(found, key=lambda k: (k.length, k.parts))


def mo_coefficients(n: int) -> typing.List[typing.Tuple[MultiIndex, int]]:
    return [(k, k.coefficient()) for k in multi_indices(n)]


def _set_partitions(items: typing.List[int]) -> typing.Iterator[typing.List[typing.List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for i, block in enumerate(partition):
            yield partition[:i] + [[first] + block] + partition[i + 1 :]


def bell_by_enumeration(n: int) -> int:
    """Bell number B_n counted by listing every set partition of {1..n}."""
    return sum(1 for _ in _set_partitions(list(range(n))))


def bell_cross_check(n: int) -> bool:
    """With every derivative of f and g equal to 1 the formula counts set partitions."""
    return sum(c for _, c in mo_coefficients(n)) == bell_by_enumeration(n)


def compose_derivative_check(f: poly.Poly, g: poly.Poly, n: int, x: poly.Rational) -> bool:
    if not 1 <= n <= MAX_CHECK_ORDER:
        raise exceptions.ValidationError(f"n must be in [1, {MAX_CHECK_ORDER}], got {n}")
    x = fractions.Fraction(x)
    inner = g(x)
    g_derivs = [g.derivative(i)(x) for i in range(n + 1)]

    by_formula = fractions.Fraction(0)
    for k, c in mo_coefficients(n):
        term = fractions.Fraction(c) * f.derivative(k.length)(inner)
        for part in k.parts:
            term *= g_derivs[part]
        by_formula += term

    direct = f.compose(g).derivative(n)(x)
    logger.debug("order %d composition derivative: %s vs %s", n, by_formula, direct)
    return by_formula == direct
