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

import functools
import math

from idverify import exceptions
from idverify.specfun import bernoulli

_PI2_6 = math.pi**2 / 6.0
_SERIES_TERMS = 40


@functools.lru_cache(maxsize=None)
def _series_coefficients() -> tuple[float, ...]:
    # B_n / (n + 1)!, the Bernoulli form of Li2 in u = -log(1 - x)
    b = bernoulli.bernoulli_numbers(_SERIES_TERMS)
    return tuple(float(b[n]) / math.factorial(n + 1) for n in range(_SERIES_TERMS))


def _bernoulli_series(x: float) -> float:
    u = -math.log1p(-x)
    terms = []
    power = u
    for coeff in _series_coefficients():
        terms.append(coeff * power)
        power *= u
    return math.fsum(terms)


def dilog(x: float) -> float:
    """Real dilogarithm Li2(x) for x <= 1."""
    if x > 1:
        raise exceptions.DomainError(f"dilog requires x <= 1, got {x}")
    if x == 1:
        return _PI2_6
    if x == 0:
        return 0.0
    if x < -1:
        return -_PI2_6 - 0.5 * math.log(-x) ** 2 - dilog(1.0 / x)
    if x > 0.5:
        return _PI2_6 - math.log(x) * math.log1p(-x) - _bernoulli_series(1.0 - x)
    return _bernoulli_series(x)
