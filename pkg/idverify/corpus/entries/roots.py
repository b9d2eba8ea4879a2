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
"""Equations solved numerically: a root power sum and two closed-form roots."""

import math

from idverify import exceptions, types
from idverify.constants import closed_form as cf
from idverify.corpus.entries.common import entry
from idverify.corpus.identity import ONE, Category, EvalContext, check
from idverify.exact import Poly
from idverify.solve import Bracket, TailModel, enumerate_roots, root_bracketed, root_power_sum

_ROOT_TOL = 1e-14
_SQRT3 = math.sqrt(3.0)
# |r_n - s_n| bound for the roots of 2cos(sqrt3 x) + e^(-3x)
_DEVIATION_12479 = 1.0 / (16.0 * _SQRT3)
_ROOTS_12479 = 40


def _root(id, problem, statement, lhs, rhs, quote, tol=1e-10, tags=(), notes=""):
    return entry(
        id, problem, Category.ROOT_SUM, statement, lhs, rhs, quote, tol, ("roots", *tags), notes
    )


def _g_12479(x: float) -> float:
    return 2.0 * math.cos(_SQRT3 * x) + math.exp(-3.0 * x)


def _s_12479(n: int) -> float:
    return (math.pi / 2 + n * math.pi) / _SQRT3


def _roots_12479() -> list[float]:
    return enumerate_roots(
        _g_12479,
        lambda n: (_s_12479(n) - 0.125, _s_12479(n) + 0.125),
        _ROOTS_12479,
        _ROOT_TOL,
    )


def _amm_12479(ctx: EvalContext) -> types.NumericResult:
    tail = TailModel(asymptote=_s_12479, deviation_bound=lambda n: _DEVIATION_12479)
    return root_power_sum(_roots_12479(), 6, tail, _ROOTS_12479, root_err=_ROOT_TOL)


def _amm_12479_localization(ctx: EvalContext) -> types.NumericResult:
    roots = _roots_12479()
    near = all(abs(r - _s_12479(n)) < _DEVIATION_12479 for n, r in enumerate(roots))
    spaced = all(b - a > 1.0 for a, b in zip(roots, roots[1:]))
    return check(near and spaced)


# t + t^2 + t^3 + 1/t + 1/t^2 + 1/t^3 = 70, times t^3
_TAN_POLY_4905 = Poly.of(1, 1, 1, -70, 1, 1, 1)


def _crux_4905(lo: float, hi: float):
    def lhs(ctx: EvalContext) -> types.NumericResult:
        count = _TAN_POLY_4905.real_root_count()
        if count != 2:
            raise exceptions.EvaluationError(f"expected two real roots in tan x, found {count}")
        br = Bracket.around(lambda t: float(_TAN_POLY_4905(t)), lo, hi)
        t = root_bracketed(lambda t: float(_TAN_POLY_4905(t)), br, _ROOT_TOL)
        return types.NumericResult(math.atan(t), _ROOT_TOL)

    lhs.__name__ = f"crux_4905_on_{lo}_{hi}"
    return lhs


def _y_4636(x: float) -> float:
    return math.log(4) * math.log(4**x - 7) - math.log(3) * math.log(3**x + 7)


def _crux_4636(ctx: EvalContext) -> types.NumericResult:
    x0 = math.log(7) / math.log(4)
    grid = [x0 + (5.0 - x0) * k / 256 for k in range(1, 257)]
    values = [_y_4636(x) for x in grid]
    changes = sum(1 for a, b in zip(values, values[1:]) if (a < 0) != (b < 0))
    if changes != 1:
        raise exceptions.EvaluationError(f"expected one sign change on ({x0}, 5], saw {changes}")
    br = Bracket.around(_y_4636, x0 + 1e-6, 5.0)
    return types.NumericResult(root_bracketed(_y_4636, br, _ROOT_TOL), _ROOT_TOL)


ENTRIES = (
    _root(
        "amm-12479",
        "12479",
        "sum r_n^-6 over the positive roots of 2cos(sqrt3 x) + e^(-3x)",
        _amm_12479,
        cf.num(8, 5),
        r"=\frac{8}{5}",
        tol=1e-8,
        notes="40 computed roots, then the asymptote s_n = (pi/2 + n pi)/sqrt3",
    ),
    _root(
        "amm-12479loc",
        "12479",
        "the roots satisfy |r_n - s_n| < 1/(16 sqrt3) and r_n - r_{n-1} > 1",
        _amm_12479_localization,
        ONE,
        r"|r_n-s_n|<\frac{1}{16\sqrt 3}",
        tags=("check",),
    ),
    _root(
        "crux-4905a",
        "4905",
        "x + y = pi/2, tan x + ... = 70: the smaller angle",
        _crux_4905(0.2, 0.3),
        cf.div("pi", 12),
        r"15^\circ",
    ),
    _root(
        "crux-4905b",
        "4905",
        "x + y = pi/2, tan x + ... = 70: the larger angle",
        _crux_4905(3.5, 4.0),
        cf.div(cf.mul(5, "pi"), 12),
        r"75^\circ",
    ),
    _root(
        "crux-4636",
        "4636",
        "log4 log(4^x - 7) = log3 log(3^x + 7) on (log7/log4, inf)",
        _crux_4636,
        cf.num(2),
        "the unique solution $x=2$",
        notes="the curve tends to -inf at the left end of its domain",
    ),
)
