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

"""Acceleration of alternating series sum_{k>=0} (-1)^k a_k.

Uses the Chebyshev-polynomial weights of Cohen, Rodriguez Villegas and Zagier:
for totally monotone a_k the error after n terms is at most 2 a_0 / (3 + sqrt 8)^n.
"""

import logging
import math
import sys
import typing

from idverify import exceptions, types

logger = logging.getLogger(__name__)

_EPS = sys.float_info.epsilon
_RATE = 3.0 + math.sqrt(8.0)
DEFAULT_TERMS = 40
DEFAULT_BURN_IN = 4


def _cvz(a: typing.Sequence[float], n: int) -> tuple[float, float]:
    """Accelerated sum over the first n magnitudes and its rounding floor."""
    d = _RATE**n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    parts = []
    for k in range(n):
        c = b - c
        parts.append(c * a[k])
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    s = math.fsum(parts)
    floor = 8 * _EPS * math.fsum(abs(p) for p in parts) / d
    return s / d, floor


def check_magnitudes(a: typing.Sequence[float], burn_in: int = DEFAULT_BURN_IN) -> None:
    for k in range(burn_in, len(a)):
        if not math.isfinite(a[k]):
            raise exceptions.EvaluationError(f"magnitude {k} is not finite: {a[k]}")
        if a[k] < 0:
            raise exceptions.ConvergenceError(
                f"magnitude {k} is negative: {a[k]}; terms do not alternate"
            )
        if k > burn_in and a[k] > a[k - 1] * (1 + 1e-12):
            raise exceptions.ConvergenceError(
                f"magnitudes not decreasing at {k}: {a[k - 1]} -> {a[k]}"
            )


def accelerate(
    a: typing.Sequence[float], tol: float = 0.0, burn_in: int = DEFAULT_BURN_IN
) -> types.NumericResult:
    """sum (-1)^k a[k] from precomputed magnitudes."""
    n = len(a)
    if n < 5:
        raise exceptions.ValidationError("need at least 5 magnitudes")
    check_magnitudes(a, burn_in)

    value, floor = _cvz(a, n)
    shorter, _ = _cvz(a, n - 4)
    bound = 2.0 * abs(a[0]) * _RATE**-n
    err = max(bound, abs(value - shorter), floor)
    logger.debug("accelerated %d terms: %r (err %g)", n, value, err)
    return types.NumericResult(value, err, n, err <= tol if tol > 0 else True)


def sum_alternating(
    magnitude: typing.Callable[[int], float],
    start: int,
    tol: float,
    n_terms: int = DEFAULT_TERMS,
    burn_in: int = DEFAULT_BURN_IN,
) -> types.NumericResult:
    """sum_{k>=0} (-1)^k magnitude(start + k)."""
    a = [float(magnitude(start + k)) for k in range(n_terms)]
    return accelerate(a, tol, burn_in)
