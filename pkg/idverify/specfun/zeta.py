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

"""Riemann zeta and Dirichlet eta for real arguments.

Both use Euler-Maclaurin summation with a fixed number of explicit terms and
Bernoulli corrections through B_12. The same machinery exposes the power tail
sum_{k>n} k^-s, which the series kernels use to close asymptotic tails.
"""

import logging
import math

from idverify import exceptions
from idverify.specfun import bernoulli

logger = logging.getLogger(__name__)

EXPLICIT_TERMS = 20
_CORRECTIONS = 6

# B_2j / (2j)! for j = 1..6
_BERNOULLI_FACTORS = tuple(
    float(bernoulli.bernoulli(2 * j)) / math.factorial(2 * j)
    for j in range(1, _CORRECTIONS + 1)
)


def _rising(s: float, m: int) -> float:
    acc = 1.0
    for i in range(m):
        acc *= s + i
    return acc


def _em_tail(s: float, n: int) -> tuple[float, float]:
    """Euler-Maclaurin value of sum_{k>n} k^-s and a bound on the remainder."""
    nf = float(n)
    total = nf ** (1.0 - s) / (s - 1.0) - 0.5 * nf ** (-s)
    for j, factor in enumerate(_BERNOULLI_FACTORS, start=1):
        total += factor * _rising(s, 2 * j - 1) * nf ** (-s - 2 * j + 1)

    # the remainder is bounded by the first omitted correction
    j = _CORRECTIONS + 1
    nxt = float(bernoulli.bernoulli(2 * j)) / math.factorial(2 * j)
    remainder = abs(nxt * _rising(s, 2 * j - 1) * nf ** (-s - 2 * j + 1))
    return total, remainder


def power_tail(s: float, n: int) -> float:
    """sum_{k > n} k^-s for s > 1 and n >= 0."""
    if s <= 1:
        raise exceptions.DomainError(f"power tail diverges for s={s}")
    if n < 0:
        raise exceptions.ValidationError("n must be non-negative")

    if n >= EXPLICIT_TERMS:
        return _em_tail(s, n)[0]

    head = math.fsum(k ** (-s) for k in range(n + 1, EXPLICIT_TERMS + 1))
    return head + _em_tail(s, EXPLICIT_TERMS)[0]


def zeta(s: float) -> float:
    if s <= 1:
        raise exceptions.DomainError(f"zeta requires s > 1, got {s}")

    head = math.fsum(k ** (-s) for k in range(1, EXPLICIT_TERMS + 1))
    tail, remainder = _em_tail(s, EXPLICIT_TERMS)
    value = head + tail
    if remainder > 1e-14 * value:
        logger.warning("zeta(%s) remainder bound %s exceeds target", s, remainder)
    return value


def eta(s: float) -> float:
    if s < 1:
        raise exceptions.DomainError(f"eta requires s >= 1, got {s}")
    if s == 1:
        return math.log(2.0)
    # 1 - 2^(1-s) without cancellation near s = 1
    return -math.expm1((1.0 - s) * math.log(2.0)) * zeta(s)
