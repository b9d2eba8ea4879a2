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
"""Pairs of independent computations that must agree; the right side is evaluated too."""

import functools
import math

from idverify import types
from idverify.corpus.entries.common import entry, quad
from idverify.corpus.identity import Category, EvalContext
from idverify.quad import Interval, integrate
from idverify.seqsum import TailStrategy, sum_double
from idverify.specfun import binomial_real

# crux-4937 instance: f(t) = |sin(pi t / a)| has period a
_A_4937 = 1.0
_B_4937 = 0.7


def _consistency(id, problem, statement, lhs, rhs, quote, tol=1e-9, notes=""):
    return entry(
        id,
        problem,
        Category.CONSISTENCY,
        statement,
        lhs,
        rhs,
        quote,
        tol,
        ("consistency",),
        notes,
    )


@functools.lru_cache(maxsize=None)
def _central(n: int) -> float:
    """binom(2n, n) / 4^n, which is (-1)^n binom(-1/2, n)."""
    return (-1) ** n * binomial_real(-0.5, n)


def _term_1431(n: int, k: int) -> float:
    sign = 1.0 if k % 2 else -1.0
    return sign * _central(n) / ((2 * n + 1) * (2 * k + 1) * (2 * n + 2 * k + 3) ** 2)


def _elem_1431_series(ctx: EvalContext) -> types.NumericResult:
    # rows decay like n^-3.5 with a power series correction in 1/n
    outer = TailStrategy.asymptotic_model(3.5, ctx.budget(400, floor=40), corrections=3)
    return sum_double(
        _term_1431,
        outer,
        ctx.target / 10,
        row_tail=TailStrategy.alternating_accel(ctx.alternating_terms),
        start=(0, 0),
    )


def _elem_1431_integral(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: math.asin(x) * math.atan(x) * math.log(x),
        Interval.finite(0.0, 1.0, singular=(True, True)),
        ctx,
    )


def _f_4937(t: float) -> float:
    return abs(math.sin(math.pi * t / _A_4937))


def _inner_4937(y: float, ctx: EvalContext) -> float:
    """int_y^{a+y} f(t)/t dt; the kink of f at t = a lies inside for 0 < y < a."""
    splits = (_A_4937,) if _A_4937 < _A_4937 + y else ()
    iv = Interval.finite(y, _A_4937 + y, split_points=splits)
    return integrate(lambda t: _f_4937(t) / t, iv, ctx.quad_options(1e-13)).value


def _crux_4937_double(ctx: EvalContext) -> types.NumericResult:
    return quad(lambda y: _inner_4937(y, ctx), Interval.finite(0.0, _B_4937), ctx)


def _crux_4937_boundary(ctx: EvalContext) -> types.NumericResult:
    a, b = _A_4937, _B_4937
    first = quad(lambda t: _f_4937(t) / t, Interval.finite(b, a + b, split_points=(a,)), ctx)
    second = quad(lambda s: _f_4937(s) / s, Interval.finite(a, a + b), ctx)
    return types.combine([first, second], [b, a])


ENTRIES = (
    _consistency(
        "elem-1431",
        "1431",
        "sum_{k,n} (-1)^(k+n+1) binom(-1/2, n) / ((2n+1)(2k+1)(2n+2k+3)^2) "
        "= int_0^1 arcsin x arctan x log x dx",
        _elem_1431_series,
        _elem_1431_integral,
        "value of the integral",
        tol=1e-8,
        notes="no closed form; the double series and the integral are computed independently",
    ),
    _consistency(
        "crux-4937",
        "4937",
        "int_0^b int_0^a f(x+y)/(x+y) dx dy = b int_b^{a+b} f(t)/t dt + a int_a^{a+b} f(s)/s ds",
        _crux_4937_double,
        _crux_4937_boundary,
        r"b\int_b^{a+b} \frac{f(t)}{t} dt+a \int_a^{a+b} \frac{f(s)}{s}ds",
        notes="f(t) = |sin(pi t)|, a = 1, b = 0.7",
    ),
)
