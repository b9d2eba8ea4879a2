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
"""Constrained minima found by multistart descent."""

import math

from idverify import exceptions, types
from idverify.constants import closed_form as cf
from idverify.corpus.entries.common import entry
from idverify.corpus.identity import Category, EvalContext
from idverify.solve import minimize_multistart

_MIN_TOL = 1e-12
_EDGE = 1e-3
_POINT_TOL = 1e-4


def _extremum(id, problem, statement, lhs, rhs, quote, tol=1e-9, notes=""):
    return entry(
        id, problem, Category.EXTREMUM, statement, lhs, rhs, quote, tol, ("extremum",), notes
    )


def _sphere_objective(p) -> float:
    theta, phi = p
    x = math.sin(theta) * math.cos(phi)
    y = math.sin(theta) * math.sin(phi)
    z = math.cos(theta)
    return 1.0 / x + 1.0 / y + 2.0 / z


def _elem_1442(ctx: EvalContext) -> types.NumericResult:
    # the positive octant of the sphere, in polar angles
    hi = math.pi / 2 - _EDGE
    res = minimize_multistart(
        _sphere_objective,
        (_EDGE, _EDGE),
        (hi, hi),
        starts=ctx.minimize_starts,
        tol=_MIN_TOL,
        seed=ctx.seed,
    )
    return types.NumericResult(res.value, _MIN_TOL, res.evaluations)


def _h_4817(a: float, b: float, c: float) -> float:
    def part(x, yz):
        return (x**7 + x**3 + yz) / (x + yz + 1.0)

    return part(a, b * c) + part(b, c * a) + part(c, a * b)


def _crux_4817(ctx: EvalContext) -> types.NumericResult:
    res = minimize_multistart(
        lambda p: _h_4817(p[0], p[1], 1.0 / (p[0] * p[1])),
        (0.2, 0.2),
        (5.0, 5.0),
        starts=ctx.minimize_starts,
        tol=_MIN_TOL,
        seed=ctx.seed,
    )
    if max(abs(v - 1.0) for v in res.point) > _POINT_TOL:
        raise exceptions.EvaluationError(f"minimum found away from (1, 1, 1): {res.point}")
    return types.NumericResult(res.value, _MIN_TOL, res.evaluations)


def _elem_1383_max(ctx: EvalContext) -> types.NumericResult:
    res = minimize_multistart(
        lambda p: -((1.0 - p[0]) * math.log(2.0) + math.log(math.sin(p[0] * math.pi / 2))),
        (0.5,),
        (1.0,),
        starts=8,
        tol=_MIN_TOL,
        seed=ctx.seed,
    )
    return types.NumericResult(-res.value, _MIN_TOL, res.evaluations)


HOLDER_LOG_MAX = cf.add(
    cf.mul(
        cf.sub(1, cf.mul(cf.div(2, "pi"), cf.arctan(cf.div("pi", cf.mul(2, "log2"))))),
        "log2",
    ),
    cf.log(cf.div("pi", cf.sqrt(cf.add(cf.pow_("pi", 2), cf.mul(4, cf.pow_("log2", 2)))))),
)

ENTRIES = (
    _extremum(
        "elem-1442",
        "1442",
        "min of 1/x + 1/y + 2/z over x^2 + y^2 + z^2 = 1, x, y, z > 0",
        _elem_1442,
        cf.pow_(cf.add(2, cf.pow_(2, cf.num(2, 3))), cf.num(3, 2)),
        r"(2+2^{2/3})^{3/2}",
        notes="the minimizer has x = y and z = 2^(1/3) x",
    ),
    _extremum(
        "crux-4817",
        "4817",
        "inf of H(a, b, c) over abc = 1 is 3, attained at (1, 1, 1)",
        _crux_4817,
        cf.num(3),
        r"\inf_L H =3",
        notes="c = 1/(ab) on the box [0.2, 5]^2",
    ),
    _extremum(
        "elem-1383max",
        "1383",
        "max over 0 < a <= 1 of log max(1, 2^(1-a) sin(a pi/2))",
        _elem_1383_max,
        HOLDER_LOG_MAX,
        r"\max_{0<\alpha\leq 1} \log \sigma(\alpha)",
        notes="sigma = 1 for a <= 1/2, so the search runs over [1/2, 1]",
    ),
)
