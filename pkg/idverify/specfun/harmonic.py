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

import fractions
import math

from idverify import exceptions
from idverify.specfun import zeta

_PI2_6 = math.pi**2 / 6.0
_GAMMA = 0.57721566490153286


def harmonic(n: int, order: int = 1) -> fractions.Fraction:
    """Exact H_n^(order) = sum_{j=1..n} 1/j^order."""
    if n < 0:
        raise exceptions.ValidationError(f"n must be non-negative, got {n}")
    if order not in (1, 2):
        raise exceptions.ValidationError(f"order must be 1 or 2, got {order}")

    total = fractions.Fraction(0)
    for j in range(1, n + 1):
        total += fractions.Fraction(1, j**order)
    return total


def harmonic_float(n: int, order: int = 1) -> float:
    """Binary64 H_n^(order) in O(1) for large n."""
    if n < 0:
        raise exceptions.ValidationError(f"n must be non-negative, got {n}")
    if order not in (1, 2):
        raise exceptions.ValidationError(f"order must be 1 or 2, got {order}")
    if n < 20:
        return math.fsum(1.0 / j**order for j in range(1, n + 1))
    if order == 2:
        return _PI2_6 - zeta.power_tail(2.0, n)

    inv2 = 1.0 / (float(n) * n)
    correction = inv2 * (
        -1.0 / 12.0 + inv2 * (1.0 / 120.0 + inv2 * (-1.0 / 252.0 + inv2 / 240.0))
    )
    return math.fsum([math.log(n), _GAMMA, 0.5 / n, correction])
