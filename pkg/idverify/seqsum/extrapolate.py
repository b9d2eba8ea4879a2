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

"""Limits of sequences from samples on the grid n = n0 * 2^k, k = 0..K."""

import enum
import logging
import math
import typing

import numpy as np

from idverify import exceptions, types

logger = logging.getLogger(__name__)


class Method(str, enum.Enum):
    RICHARDSON = "richardson"
    WYNN_EPSILON = "wynn_epsilon"
    AITKEN = "aitken"
    LOG_FIT = "log_fit"


Basis = typing.Sequence[typing.Callable[[float], float]]

DEFAULT_LOG_BASIS: Basis = (
    lambda n: 1.0,
    lambda n: math.log(n) / math.sqrt(n),
    lambda n: 1.0 / math.sqrt(n),
    lambda n: math.log(n) / n,
    lambda n: 1.0 / n,
)

_MIN_SAMPLES = {
    Method.RICHARDSON: 2,
    Method.WYNN_EPSILON: 3,
    Method.AITKEN: 3,
}


def sample_grid(n0: int, k_max: int) -> list[int]:
    return [n0 * 2**k for k in range(k_max + 1)]


def richardson(values: typing.Sequence[float], exponents: typing.Sequence[float]) -> list[float]:
    """Diagonal of the Richardson table for step ratio 2.

    Column j removes an error term of order n^-exponents[j-1].
    """
    row = list(values[:1])
    diagonal = [values[0]]
    for k in range(1, len(values)):
        new = [values[k]]
        for j in range(1, k + 1):
            factor = 2.0 ** exponents[j - 1] - 1.0
            new.append(new[j - 1] + (new[j - 1] - row[j - 1]) / factor)
        row = new
        diagonal.append(new[-1])
    return diagonal


def wynn_epsilon(values: typing.Sequence[float]) -> list[float]:
    """Even-column estimates of the epsilon table, newest last."""
    estimates = [values[-1]]
    prev = [0.0] * (len(values) + 1)
    cur = list(values)
    col = 0
    while len(cur) > 1:
        nxt = []
        for i in range(len(cur) - 1):
            diff = cur[i + 1] - cur[i]
            if diff == 0.0:
                # equal even-column entries are the limit; odd columns hold no estimate
                return estimates + [cur[i + 1]] if col % 2 == 0 else estimates
            nxt.append(prev[i + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        col += 1
        if col % 2 == 0:
            estimates.append(cur[-1])
    return estimates


def aitken(values: typing.Sequence[float]) -> list[float]:
    """Repeated delta-squared; the last entry of each pass, newest last."""
    estimates = [values[-1]]
    cur = list(values)
    while len(cur) >= 3:
        nxt = []
        for i in range(len(cur) - 2):
            denom = cur[i + 2] - 2 * cur[i + 1] + cur[i]
            if denom == 0.0:
                return estimates + [cur[i + 2]]
            nxt.append(cur[i + 2] - (cur[i + 2] - cur[i + 1]) ** 2 / denom)
        cur = nxt
        estimates.append(cur[-1])
    return estimates


def log_fit(
    points: typing.Sequence[int], values: typing.Sequence[float], basis: Basis
) -> list[float]:
    """Constant coefficient of a least-squares fit, without and with the smallest n."""
    if len(points) < len(basis) + 1:
        raise exceptions.ValidationError(
            f"log_fit needs more than {len(basis)} samples, got {len(points)}"
        )

    def constant(pts, vals) -> float:
        design = np.array([[b(float(n)) for b in basis] for n in pts])
        norms = np.linalg.norm(design, axis=0)
        coeffs, *_ = np.linalg.lstsq(design / norms, np.array(vals), rcond=None)
        return float(coeffs[0] / norms[0])

    return [constant(points[1:], values[1:]), constant(points, values)]


def _settling(estimates: typing.Sequence[float]) -> bool:
    if len(estimates) < 3:
        return True
    last = abs(estimates[-1] - estimates[-2])
    return last <= abs(estimates[-2] - estimates[-3]) or last <= 8 * math.ulp(estimates[-1])


def limit_extrapolate(
    seq: typing.Callable[[int], float],
    n0: int,
    k_max: int,
    method: typing.Union[Method, str] = Method.RICHARDSON,
    exponents: typing.Optional[typing.Sequence[float]] = None,
    basis: typing.Optional[Basis] = None,
    tol: typing.Optional[float] = None,
) -> types.NumericResult:
    """Extrapolated limit of seq(n) from n = n0 * 2^k, k = 0..k_max.

    exponents lists the orders of the error terms removed by Richardson
    (1, 2, 3, ... by default); basis replaces the default log_fit basis, whose
    first function must be the constant. The result is converged when the last two
    estimates agree to tol, or without a tol when their change is not larger than
    the change before it.
    """
    method = Method(method)
    if n0 < 1:
        raise exceptions.ValidationError(f"n0 must be positive, not {n0}")
    points = sample_grid(n0, k_max)
    if len(points) < _MIN_SAMPLES.get(method, 1):
        raise exceptions.ValidationError(f"{method.value} needs more samples than k_max={k_max}")

    values = [float(seq(n)) for n in points]
    if not all(math.isfinite(v) for v in values):
        raise exceptions.ConvergenceError(f"sequence is not finite on the grid: {values}")

    if method == Method.RICHARDSON:
        exps = list(exponents) if exponents is not None else list(range(1, len(points)))
        if len(exps) < len(points) - 1:
            raise exceptions.ValidationError("need one exponent per Richardson column")
        estimates = richardson(values, exps)
    elif method == Method.WYNN_EPSILON:
        estimates = wynn_epsilon(values)
    elif method == Method.AITKEN:
        estimates = aitken(values)
    else:
        estimates = log_fit(points, values, basis or DEFAULT_LOG_BASIS)

    value = estimates[-1]
    err = abs(estimates[-1] - estimates[-2]) if len(estimates) > 1 else abs(values[-1] - values[-2])
    if not (math.isfinite(value) and math.isfinite(err)):
        raise exceptions.ConvergenceError(f"{method.value} diverged: {estimates}")
    converged = err <= tol if tol is not None else _settling(estimates)
    logger.debug("%s over n=%d..%d: %r (err %g)", method.value, points[0], points[-1], value, err)
    if not converged:
        logger.debug("%s estimates stopped agreeing: %r", method.value, estimates[-3:])
    return types.NumericResult(value, err, len(points), converged)
