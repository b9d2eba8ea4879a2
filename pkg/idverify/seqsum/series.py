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

"""Single infinite series with an explicit tail strategy."""

import logging
import math
import sys
import typing

import numpy as np

from idverify import exceptions, types
from idverify.seqsum import alternating
from idverify.seqsum.tail import TailIntegral, TailKind, TailStrategy
from idverify.specfun import power_tail

logger = logging.getLogger(__name__)

_EPS = sys.float_info.epsilon
_RATIO_BURN_IN = 3
Term = typing.Callable[[int], float]


def _checked(term: Term, n: int) -> float:
    try:
        value = float(term(n))
    except (OverflowError, ZeroDivisionError) as exc:
        raise exceptions.EvaluationError(f"term {n} failed: {exc}") from exc
    if not math.isfinite(value):
        raise exceptions.EvaluationError(f"term {n} is not finite: {value}")
    return value


def _partial(term: Term, start: int, count: int) -> tuple[list[float], float]:
    """The first count terms from start, and the rounding floor of their sum."""
    terms = [_checked(term, n) for n in range(start, start + count)]
    return terms, 2 * _EPS * math.fsum(abs(t) for t in terms)


def _geometric(term: Term, start: int, tail: TailStrategy, tol: float) -> types.NumericResult:
    q = tail.q
    terms: list[float] = []
    bound = math.inf
    for k in range(tail.n_terms):
        a = _checked(term, start + k)
        if k >= _RATIO_BURN_IN and terms[-1] != 0.0 and abs(a) > q * abs(terms[-1]) * (1 + 1e-9):
            raise exceptions.ConvergenceError(
                f"term ratio {abs(a / terms[-1])} at n={start + k} exceeds q={q}"
            )
        terms.append(a)
        bound = abs(a) * q / (1.0 - q)
        if bound <= tol / 2:
            break

    floor = 2 * _EPS * math.fsum(abs(t) for t in terms)
    err = bound + floor
    logger.debug("geometric series: %d terms, err %g", len(terms), err)
    return types.NumericResult(math.fsum(terms), err, len(terms), err <= tol)


def _tail_value(out: typing.Union[float, types.NumericResult]) -> tuple[float, float]:
    if isinstance(out, types.NumericResult):
        return out.value, out.err
    return float(out), 0.0


def _integral_tail(term: Term, start: int, tail: TailStrategy, tol: float) -> types.NumericResult:
    integral = typing.cast(TailIntegral, tail.tail_integral)
    terms, floor = _partial(term, start, tail.n_terms)
    last = start + tail.n_terms - 1
    before, at = terms[-2], terms[-1]
    after, after2 = _checked(term, last + 1), _checked(term, last + 2)

    # midpoint rule with a first derivative correction
    corr = (after - at) / 24.0
    upper, value_err = _tail_value(integral(last + 0.5))
    value = upper + corr

    # model check: the model's midpoint integral against the term plus its
    # curvature correction, scaled up to the length of the tail
    model_term = _tail_value(integral(last - 0.5))[0] - upper
    curvature = (after - 2 * at + before) / 24.0
    mismatch = abs(at + curvature - model_term) * max(last, 1)
    third = abs(after2 - 3 * after + 3 * at - before) / 100.0
    err = mismatch + third + value_err + floor
    logger.debug("integral tail at N=%d: %r (mismatch %g)", last, value, mismatch)

    total = math.fsum(terms) + value
    return types.NumericResult(total, err, tail.n_terms + 2, err <= tol)


def _fit_coefficients(samples: list[tuple[int, float]], alpha: float) -> np.ndarray:
    """Coefficients c_j with a_n = sum_j c_j n^-(alpha + j) at the sample points."""
    inv = np.array([1.0 / n for n, _ in samples])
    scaled = np.array([a * n**alpha for n, a in samples])
    vander = np.vander(inv, len(samples), increasing=True)
    return np.linalg.solve(vander, scaled)


def _model_tail(coeffs: np.ndarray, alpha: float, last: int) -> float:
    return math.fsum(float(c) * power_tail(alpha + j, last) for j, c in enumerate(coeffs))


def _asymptotic(term: Term, start: int, tail: TailStrategy, tol: float) -> types.NumericResult:
    terms, floor = _partial(term, start, tail.n_terms)
    last = start + tail.n_terms - 1
    m = tail.corrections + 1

    # sample points spread over the upper part of the summed range
    points = sorted({max(start, 1, round(last * (m - i) / m)) for i in range(m)}, reverse=True)
    if len(points) < m:
        raise exceptions.ValidationError("sample points for the asymptotic fit collide")
    samples = [(n, terms[n - start]) for n in points]

    coeffs = _fit_coefficients(samples, tail.alpha)
    value = _model_tail(coeffs, tail.alpha, last)
    if m > 1:
        coarser = _fit_coefficients(samples[:-1], tail.alpha)
    else:
        half = max(start, 1, last // 2)
        coarser = _fit_coefficients([(half, terms[half - start])], tail.alpha)
    err = abs(value - _model_tail(coarser, tail.alpha, last)) + floor
    logger.debug("asymptotic tail at N=%d: %r with coefficients %s", last, value, coeffs)

    return types.NumericResult(math.fsum(terms) + value, err, tail.n_terms, err <= tol)


def _alternating(term: Term, start: int, tail: TailStrategy, tol: float) -> types.NumericResult:
    first = _checked(term, start)
    sign = -1.0 if first < 0 else 1.0
    result = alternating.sum_alternating(
        lambda n: sign * (-1) ** (n - start) * _checked(term, n), start, tol, tail.n_terms
    )
    return result.scaled(sign)


def _truncate(term: Term, start: int, tail: TailStrategy, tol: float) -> types.NumericResult:
    terms, floor = _partial(term, start, tail.n_terms)
    return types.NumericResult(math.fsum(terms), floor, tail.n_terms, floor <= tol)


_STRATEGIES = {
    TailKind.GEOMETRIC_RATIO: _geometric,
    TailKind.INTEGRAL_TAIL: _integral_tail,
    TailKind.ASYMPTOTIC_MODEL: _asymptotic,
    TailKind.ALTERNATING_ACCEL: _alternating,
    TailKind.NONE_TRUNCATE: _truncate,
}


def sum_series(term: Term, start: int, tail: TailStrategy, tol: float) -> types.NumericResult:
    """sum_{n >= start} term(n), closed with the given tail strategy."""
    if not tol > 0:
        raise exceptions.ValidationError(f"tol must be positive, not {tol}")
    return _STRATEGIES[tail.kind](term, start, tail, tol)
