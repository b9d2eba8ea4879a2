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

import logging
import typing

from idverify import exceptions, types
from idverify.quad import interval, tanh_sinh

logger = logging.getLogger(__name__)

_PIECE_TOL_FLOOR = 1e-15


def period_integrals(
    f: tanh_sinh.Integrand,
    a: float,
    period: float,
    count: int,
    opts: typing.Optional[interval.QuadOptions] = None,
) -> list[types.NumericResult]:
    """Integrals of f over [a + k*period, a + (k+1)*period] for k < count.

    The per-piece results can be summed directly or handed to an alternating
    series accelerator when consecutive pieces change sign.
    """
    if not period > 0:
        raise exceptions.ValidationError(f"period must be positive, not {period}")
    if count < 1:
        raise exceptions.ValidationError(f"count must be at least 1, not {count}")

    opts = opts or interval.QuadOptions()
    piece_opts = opts.with_tol(max(opts.target_abs_tol / count, _PIECE_TOL_FLOOR))
    results = []
    for k in range(count):
        lo = a + k * period
        piece = interval.Interval.finite(lo, lo + period)
        results.append(tanh_sinh.integrate(f, piece, piece_opts))
    logger.debug("integrated %d periods of length %g from %g", count, period, a)
    return results


def integrate_periods(
    f: tanh_sinh.Integrand,
    a: float,
    period: float,
    count: int,
    opts: typing.Optional[interval.QuadOptions] = None,
) -> types.NumericResult:
    return types.combine(period_integrals(f, a, period, count, opts))
