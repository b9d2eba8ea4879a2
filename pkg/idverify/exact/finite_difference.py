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
"""Euler's finite difference theorem.

sum_{k=0..n} (-1)^k C(n, k) p(k) vanishes when deg p < n and equals
(-1)^n n! a_n when p has degree n and leading coefficient a_n.
"""

import dataclasses
import fractions
import logging
import math
import typing

import numpy as np

from idverify import exceptions
from idverify.exact import poly

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CheckReport:
    checked: int
    failures: typing.Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures


def euler_finite_difference(p: poly.Poly, n: int) -> fractions.Fraction:
    if n < 1:
        raise exceptions.ValidationError(f"n must be >= 1, got {n}")
    return sum(
        (fractions.Fraction((-1) ** k * math.comb(n, k)) * p(k) for k in range(n + 1)),
        fractions.Fraction(0),
    )


def shifted_binomial(n: int, x: poly.Rational) -> poly.Poly:
    """C(n + u x, n) as a polynomial in u."""
    acc = poly.Poly.of(1)
    for i in range(1, n + 1):
        acc = acc * poly.Poly.of(i, x)
    return acc.scale(fractions.Fraction(1, math.factorial(n)))


def _random_poly(rng: np.random.Generator, degree: int) -> poly.Poly:
    nums = rng.integers(-50, 51, size=degree + 1)
    dens = rng.integers(1, 13, size=degree + 1)
    if nums[-1] == 0:
        nums[-1] = 1
    return poly.Poly.from_coefficients(
        fractions.Fraction(int(a), int(b)) for a, b in zip(nums, dens)
    )


def euler_finite_difference_suite(seed: int, count: int = 50, max_n: int = 8) -> CheckReport:
    """Random low-degree, full-degree and shifted-binomial cases."""
    rng = np.random.default_rng(seed)
    failures: typing.List[str] = []
    checked = 0

    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        low = _random_poly(rng, int(rng.integers(0, n)))
        got = euler_finite_difference(low, n)
        checked += 1
        if got != 0:
            failures.append(f"deg {low.degree} < n={n}: got {got}")

        full = _random_poly(rng, n)
        got = euler_finite_difference(full, n)
        want = (-1) ** n * math.factorial(n) * full.leading
        checked += 1
        if got != want:
            failures.append(f"deg = n={n}: got {got}, want {want}")

        x = fractions.Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 10)))
        got = euler_finite_difference(shifted_binomial(n, x), n)
        checked += 1
        if got != (-1) ** n * x**n:
            failures.append(f"C(n+ux, n) n={n} x={x}: got {got}")

    logger.debug(
        "finite difference suite seed=%d: %d checks, %d failures", seed, checked, len(failures)
    )
    return CheckReport(checked, tuple(failures))
