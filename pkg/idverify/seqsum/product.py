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

import dataclasses
import logging
import math
import typing

from idverify import exceptions, types
from idverify.seqsum.series import sum_series
from idverify.seqsum.tail import TailKind, TailStrategy

logger = logging.getLogger(__name__)


def _exp_result(log_sum: types.NumericResult) -> types.NumericResult:
    try:
        value = math.exp(log_sum.value)
    except OverflowError as exc:
        raise exceptions.EvaluationError(f"product overflows: log = {log_sum.value}") from exc
    return types.NumericResult(
        value, value * math.expm1(log_sum.err), log_sum.evaluations, log_sum.converged
    )


def product_from_logs(
    log_factor: typing.Callable[[int], float], start: int, tail: TailStrategy, tol: float
) -> types.NumericResult:
    """exp(sum_{n >= start} log_factor(n)) for callers that compute logs accurately."""
    if tail.kind == TailKind.NONE_TRUNCATE and tail.n_terms == 0:
        return types.NumericResult.exact(1.0)
    log_sum = sum_series(log_factor, start, tail, tol)
    logger.debug("log of product: %r (err %g)", log_sum.value, log_sum.err)
    result = _exp_result(log_sum)
    return dataclasses.replace(result, converged=result.err <= tol)


def product_infinite(
    factor: typing.Callable[[int], float], start: int, tail: TailStrategy, tol: float
) -> types.NumericResult:
    """prod_{n >= start} factor(n) as the exponential of the summed logs."""

    def log_factor(n: int) -> float:
        f = factor(n)
        if not f > 0:
            raise exceptions.DomainError(f"factor {n} is not positive: {f}")
        return math.log(f)

    return product_from_logs(log_factor, start, tail, tol)
