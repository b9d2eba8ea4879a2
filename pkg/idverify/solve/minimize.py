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

import numpy as np
from scipy import optimize
from scipy.stats import qmc

from idverify import exceptions

logger = logging.getLogger(__name__)

DEFAULT_STARTS = 64
DEFAULT_SEED = 20240601
PENALTY_WEIGHT = 1e6

Point = tuple[float, ...]


@dataclasses.dataclass(frozen=True)
class MinimizeResult:
    point: Point
    value: float
    starts: int
    seed: int
    evaluations: int


def start_points(
    lower: typing.Sequence[float], upper: typing.Sequence[float], starts: int, seed: int
) -> np.ndarray:
    """Scrambled Sobol points scaled to the box."""
    sampler = qmc.Sobol(d=len(lower), scramble=True, seed=seed)
    m = math.ceil(math.log2(starts)) if starts > 1 else 0
    unit = sampler.random_base2(m)[:starts]
    return qmc.scale(unit, lower, upper)


def minimize_multistart(
    objective: typing.Callable[[Point], float],
    lower: typing.Sequence[float],
    upper: typing.Sequence[float],
    starts: int = DEFAULT_STARTS,
    tol: float = 1e-12,
    seed: int = DEFAULT_SEED,
    constraint: typing.Optional[typing.Callable[[Point], float]] = None,
) -> MinimizeResult:
    """Best Nelder-Mead descent over a box from deterministic start points.

    An equality constraint c(x) = 0 is enforced with a quadratic penalty.
    """
    if len(lower) != len(upper) or not lower:
        raise exceptions.ValidationError("box bounds must be non-empty and of equal length")
    if any(lo >= hi for lo, hi in zip(lower, upper)):
        raise exceptions.ValidationError(f"empty box: {lower} .. {upper}")
    if starts < 1:
        raise exceptions.ValidationError(f"starts must be positive, not {starts}")

    evaluations = 0

    def penalized(x: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        point = tuple(float(v) for v in x)
        try:
            value = float(objective(point))
            if constraint is not None:
                value += PENALTY_WEIGHT * float(constraint(point)) ** 2
        except (ZeroDivisionError, OverflowError, ValueError):
            return math.inf
        return value if math.isfinite(value) else math.inf

    best: typing.Optional[tuple[float, Point]] = None
    bounds = list(zip(lower, upper))
    for x0 in start_points(lower, upper, starts, seed):
        if not math.isfinite(penalized(x0)):
            continue
        res = optimize.minimize(
            penalized,
            x0,
            method="Nelder-Mead",
            bounds=bounds,
            options={"xatol": tol, "fatol": tol, "maxiter": 4000},
        )
        value = float(res.fun)
        if math.isfinite(value) and (best is None or value < best[0]):
            best = (value, tuple(float(v) for v in res.x))

    if best is None:
        raise exceptions.ConvergenceError("no feasible start point")

    value, point = best
    if constraint is not None:
        value = float(objective(point))
    logger.debug("multistart minimum %r at %s over %d starts", value, point, starts)
    return MinimizeResult(point, value, starts, seed, evaluations)
