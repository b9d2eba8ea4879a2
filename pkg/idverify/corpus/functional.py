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
"""Residual checks for functional equations and their solution families."""

import dataclasses
import logging
import math
import typing

from idverify import exceptions

logger = logging.getLogger(__name__)

Point = typing.Tuple[float, ...]
Residual = typing.Callable[[typing.Any, Point], float]


def _anywhere(point: Point) -> bool:
    return True


@dataclasses.dataclass(frozen=True)
class FunctionalEquation:
    """residual(solution, point) is zero wherever the solution satisfies the equation.

    A solution is whatever the residual knows how to apply: usually a callable,
    sometimes a tuple of callables when the equation links several unknowns.
    """

    name: str
    residual: Residual
    domain: typing.Callable[[Point], bool] = _anywhere

    def check_grid(self, grid: typing.Sequence[Point]):
        for point in grid:
            if not self.domain(point):
                raise exceptions.DomainError(
                    f"{self.name}: grid point {point} is outside the domain"
                )


def residuals_by_member(
    fe: FunctionalEquation, solutions: typing.Sequence[typing.Any], grid: typing.Sequence[Point]
) -> typing.List[float]:
    """Max |residual| over the grid, one value per solution."""
    fe.check_grid(grid)
    out = []
    for solution in solutions:
        worst = 0.0
        for point in grid:
            value = abs(fe.residual(solution, point))
            if math.isnan(value):
                raise exceptions.EvaluationError(f"{fe.name}: residual is NaN at {point}")
            worst = max(worst, value)
        out.append(worst)
    return out


def check_functional_equation(
    fe: FunctionalEquation, solutions: typing.Sequence[typing.Any], grid: typing.Sequence[Point]
) -> float:
    if not solutions:
        raise exceptions.ValidationError(f"{fe.name}: no solutions to check")
    worst = max(residuals_by_member(fe, solutions, grid))
    logger.debug("%s: max residual %g over %d members", fe.name, worst, len(solutions))
    return worst


def grid2(
    xs: typing.Sequence[float], ys: typing.Optional[typing.Sequence[float]] = None
) -> typing.List[Point]:
    ys = xs if ys is None else ys
    return [(x, y) for x in xs for y in ys]


def grid3(values: typing.Sequence[float]) -> typing.List[Point]:
    return [(x, y, z) for x in values for y in values for z in values]
