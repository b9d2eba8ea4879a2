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
import functools

from idverify import exceptions
from idverify.exact import poly


@functools.lru_cache(maxsize=None)
def gregory_coefficient(k: int) -> fractions.Fraction:
    """a_k = (-1)^(k+1) * integral_0^1 C(s, k) ds, so a_0 = -1, a_1 = 1/2, a_2 = 1/12."""
    if k < 0:
        raise exceptions.ValidationError(f"k must be non-negative, got {k}")
    return (-1) ** (k + 1) * poly.Poly.falling_binomial(k).integrate(0, 1)


def gregory_bounds(k: int) -> bool:
    """1 / (3 k^2) <= a_k <= 1 / k."""
    if k < 1:
        raise exceptions.ValidationError(f"k must be >= 1, got {k}")
    a = gregory_coefficient(k)
    return fractions.Fraction(1, 3 * k * k) <= a <= fractions.Fraction(1, k)
