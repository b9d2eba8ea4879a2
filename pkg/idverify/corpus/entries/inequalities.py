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
"""Inequalities, checked exactly where the terms are rational and on grids otherwise."""

import fractions
import math

import numpy as np

from idverify import types
from idverify.corpus.entries.common import entry, quad
from idverify.corpus.identity import ONE, Category, EvalContext, check
from idverify.quad import Interval

F = fractions.Fraction

_SIN1_MARGIN = 1.0 - 1.0 / (2.0 * math.sin(1.0))
_TANH_GAP = 1e-12
_HOLDER_SLACK = 0.05
_HOLDER_ALPHAS = (0.2, 0.4, 0.5, 0.6, 0.8, 1.0)
_CIRCLE_POINTS = 200


def _ineq(id, problem, statement, lhs, quote, tags=(), notes=""):
    return entry(
        id,
        problem,
        Category.INEQUALITY,
        statement,
        lhs,
        ONE,
        quote,
        tags=("inequality", *tags),
        notes=notes,
    )


def _mm_1947(ctx: EvalContext) -> types.NumericResult:
    n = np.arange(ctx.budget(100_000) + 1)
    margin = np.cumsum(np.abs(np.cos(n))) - n / 2.0
    # roundoff in the running sum stays far below the analytic margin
    return check(bool(margin.min() >= _SIN1_MARGIN - 1e-9))


def _tanh_quotients(x: F, n_max: int):
    """(S_{2n-1}/C_{2n}, S_{2n+1}/C_{2n}) for n = 1 .. n_max, exactly."""
    c = F(1)
    s_prev = x
    term = x
    for n in range(1, n_max + 1):
        term *= x / (2 * n)
        c += term
        term *= x / (2 * n + 1)
        s_next = s_prev + term
        yield s_prev / c, s_next / c
        s_prev = s_next


def _amm_10857(ctx: EvalContext) -> types.NumericResult:
    holds = True
    for k in range(1, 31):
        x = F(k, 10)
        pairs = list(_tanh_quotients(x, 20))
        lower = [lo for lo, _ in pairs]
        upper = [hi for _, hi in pairs]
        holds &= all(a < b for a, b in zip(lower, lower[1:]))
        holds &= all(a > b for a, b in zip(upper, upper[1:]))
        t = math.tanh(float(x))
        for lo, hi in pairs:
            if float(hi - lo) > _TANH_GAP:
                holds &= float(lo) < t < float(hi)
    return check(holds)


def _chebyshev_power_integral(n: int, ctx: EvalContext) -> types.NumericResult:
    """int_1^inf T_n(x)^(-2/n) dx after x = cosh t."""
    scale = 2.0 ** (-1.0 + 2.0 / n)

    def f(t):
        den = (1.0 + math.exp(-2.0 * n * t)) ** (2.0 / n)
        return scale * math.exp(-t) * -math.expm1(-2.0 * t) / den

    return quad(f, Interval.semi_infinite(0.0, split_points=(1.0,)), ctx)


def _crux_4822(ctx: EvalContext) -> types.NumericResult:
    holds = True
    worst = 0.0
    for n in range(1, 11):
        r = _chebyshev_power_integral(n, ctx)
        holds &= 1.0 / 3.0 < r.value - r.err and r.value + r.err < 4.0 ** (1.0 / n) / 3.0
        worst = max(worst, r.err)
    return check(holds, worst)


def _amm_12490(ctx: EvalContext) -> types.NumericResult:
    holds = True
    worst = 0.0
    for n in range(1, ctx.budget(40) + 1):
        iv = Interval.finite(0.0, 1.0, [k / (2 * n) for k in range(1, 2 * n)])
        sine = quad(lambda x: math.sin(2 * math.pi * n * x) * math.exp(x) / n, iv, ctx)
        cosine = quad(lambda x: math.cos(2 * math.pi * n * x) * math.exp(x), iv, ctx)
        holds &= sine.value + sine.err <= 0.0 and cosine.value - cosine.err >= 0.0
        worst = max(worst, sine.err, cosine.err)
    sawtooth = quad(lambda x: (x * x - x) * math.exp(x), Interval.finite(0.0, 1.0), ctx)
    holds &= math.pi / 2 * (sawtooth.value + sawtooth.err) <= 0.0
    return check(holds, max(worst, sawtooth.err))


def _elem_1453(ctx: EvalContext) -> types.NumericResult:
    holds = True
    for x in (F(101, 100), F(11, 10), F(3, 2), F(2), F(3), F(7), F(50)):
        for n in range(13):
            holds &= (1 - 1 / x) ** n <= 1 - n / (x + n - 1)
            holds &= (1 - 1 / x) ** (n - 1) <= x / (x + n - 1)
    return check(holds)


def holder_ratio_sup(alpha: float, points: int = _CIRCLE_POINTS) -> float:
    """Largest |(1-z)^a - (1-w)^a| / |z-w|^a over pairs of points on the unit circle.

    The points are equally spaced and include z = 1.
    """
    z = np.exp(2j * np.pi * np.arange(points) / points)
    base = 1.0 - z
    # principal branch, with 0^a = 0
    powered = np.abs(base) ** alpha * np.exp(1j * alpha * np.angle(base))
    num = np.abs(powered[:, None] - powered[None, :])
    den = np.abs(z[:, None] - z[None, :]) ** alpha
    off = ~np.eye(points, dtype=bool)
    return float(np.max(num[off] / den[off]))


def holder_constant(alpha: float) -> float:
    return max(1.0, 2.0 ** (1.0 - alpha) * math.sin(alpha * math.pi / 2))


def _elem_1383(ctx: EvalContext) -> types.NumericResult:
    holds = True
    for alpha in _HOLDER_ALPHAS:
        sup = holder_ratio_sup(alpha)
        sigma = holder_constant(alpha)
        holds &= sigma - _HOLDER_SLACK <= sup <= sigma + 1e-9
    return check(holds)


ENTRIES = (
    _ineq(
        "mm-1947",
        "1947",
        "sum_{k=0}^n |cos k| >= n/2 for every n",
        _mm_1947,
        r"\geq \frac{n}{2}",
        notes="n up to 10^5; the margin is at least 1 - 1/(2 sin 1)",
    ),
    _ineq(
        "amm-10857",
        "10857",
        "S_{2n-1}/C_{2n} < tanh x < S_{2n+1}/C_{2n}, the bounds monotone in n",
        _amm_10857,
        r"{S_{2n-1}\over C_{2n}}< \tanh",
        tags=("exact",),
        notes="x = 0.1, 0.2, ..., 3 and n <= 20 in rational arithmetic",
    ),
    _ineq(
        "crux-4822",
        "4822",
        "1/3 < int_1^inf T_n(x)^(-2/n) dx < 4^(1/n)/3",
        _crux_4822,
        r"\frac{1}{3} \sqrt[n]{4}",
        notes="n = 1 .. 10",
    ),
    _ineq(
        "amm-12490",
        "12490",
        "int_0^1 sin(2 pi n x) f(x)/n dx <= 0 and int_0^1 cos(2 pi n x) g(x) dx >= 0",
        _amm_12490,
        r"\leq 0",
        notes="f = g = e^x, n <= 40, plus the summed form (pi/2) int (x^2 - x) f'",
    ),
    _ineq(
        "elem-1453",
        "1453",
        "(1 - 1/x)^n <= 1 - n/(x + n - 1) for x > 1",
        _elem_1453,
        r"\left(1-\frac{1}{x}\right)^n\leq 1-\frac{n}{x+n-1}",
        tags=("exact",),
        notes="seven rational x and n <= 12",
    ),
    _ineq(
        "elem-1383",
        "1383",
        "sup |(1-z)^a - (1-w)^a| / |z-w|^a over the closed disk is max(1, 2^(1-a) sin(a pi/2))",
        _elem_1383,
        r"\max\{1, 2^{1-\alpha}\sin(\alpha\pi/2)\}",
        tags=("grid",),
        notes="the sup over 200 x 200 circle pairs lies within 0.05 below the formula",
    ),
)
