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

"""Bracketed root finding with Brent's method.

The iteration follows scipy's brentq: inverse quadratic or secant steps when
they stay well inside the bracket, bisection otherwise.
"""

import dataclasses
import logging
import math
import sys
import typing

from idverify import exceptions

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon
REL_TOL_FLOOR = 1e-14
MAX_ITER = 200


@dataclasses.dataclass(frozen=True)
class Bracket:
    """An interval [a, b] on which the target function changes sign.

    fa and fb are the function values at the ends; build with around() to have
    them evaluated and the sign change checked.
    """

    a: float
    b: float
    fa: float
    fb: float

    def __post_init__(self):
        if not self.a < self.b:
            raise exceptions.ValidationError(f"bracket needs a < b, got [{self.a}, {self.b}]")
        if math.isnan(self.fa) or math.isnan(self.fb):
            raise exceptions.EvaluationError(f"function is NaN on [{self.a}, {self.b}]")
        if self.fa * self.fb > 0:
            raise exceptions.ConvergenceError(
                f"no sign change on [{self.a}, {self.b}]: f = {self.fa}, {self.fb}"
            )

    @classmethod
    def around(cls, f: typing.Callable[[float], float], a: float, b: float) -> "Bracket":
        return cls(a, b, f(a), f(b))


def root_bracketed(f: typing.Callable[[float], float], br: Bracket, tol: float = 1e-14) -> float:
    xpre, xcur = br.a, br.b
    fpre, fcur = br.fa, br.fb
    if fpre == 0:
        return xpre
    if fcur == 0:
        return xcur

    xblk, fblk = 0.0, 0.0
    spre = scur = 0.0
    for i in range(MAX_ITER):
        if fpre * fcur < 0:
            xblk, fblk = xpre, fpre
            spre = scur = xcur - xpre
        if abs(fblk) < abs(fcur):
            xpre, xcur, xblk = xcur, xblk, xcur
            fpre, fcur, fblk = fcur, fblk, fcur

        delta = (max(tol, REL_TOL_FLOOR * abs(xcur)) + 2 * EPS * abs(xcur)) / 2
        sbis = (xblk - xcur) / 2
        if fcur == 0 or abs(sbis) < delta:
            logger.debug("root %r after %d iterations", xcur, i)
            return xcur

        if abs(spre) > delta and abs(fcur) < abs(fpre):
            if xpre == xblk:
                stry = -fcur * (xcur - xpre) / (fcur - fpre)
            else:
                dpre = (fpre - fcur) / (xpre - xcur)
                dblk = (fblk - fcur) / (xblk - xcur)
                stry = -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))
            if 2 * abs(stry) < min(abs(spre), 3 * abs(sbis) - delta):
                spre, scur = scur, stry
            else:
                spre = scur = sbis
        else:
            spre = scur = sbis

        xpre, fpre = xcur, fcur
        xcur += scur if abs(scur) > delta else math.copysign(delta, sbis)
        fcur = f(xcur)
        if math.isnan(fcur):
            raise exceptions.EvaluationError(f"function is NaN at {xcur}")

    raise exceptions.ConvergenceError(
        f"no convergence on [{br.a}, {br.b}] in {MAX_ITER} iterations"
    )
