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

import math

from idverify import exceptions

SHIFT_THRESHOLD = 8.0

# B_2k for the asymptotic series sum_k B_2k / x^(2k+1)
_ASYMPTOTIC_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def trigamma(x: float) -> float:
    """psi_1(x) = sum_{j>=0} 1/(j + x)^2 for x > 0."""
    if x <= 0:
        raise exceptions.DomainError(f"trigamma requires x > 0, got {x}")

    shifted = []
    while x < SHIFT_THRESHOLD:
        shifted.append(1.0 / (x * x))
        x += 1.0

    inv = 1.0 / x
    inv2 = inv * inv
    terms = [inv, 0.5 * inv2]
    power = inv * inv2
    for b2k in _ASYMPTOTIC_BERNOULLI:
        terms.append(b2k * power)
        power *= inv2
    return math.fsum(shifted + terms)
