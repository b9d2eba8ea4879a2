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
"""Definite integrals."""

import fractions
import math

import numpy as np

from idverify import types
from idverify.constants import closed_form as cf
from idverify.corpus.entries.common import (
    alternating_pieces,
    entry,
    oscillating_half_line,
    quad,
    sinc_minus_one,
)
from idverify.corpus.identity import Category, EvalContext
from idverify.exact import Poly
from idverify.quad import Interval, integrate_complex
from idverify.specfun import dilog

F = fractions.Fraction
PI = math.pi
# whole periods integrated before an oscillating tail is closed analytically
_PERIODS = 600


def _integral(id, problem, statement, lhs, rhs, quote, tol=1e-10, tags=(), notes=""):
    return entry(
        id, problem, Category.INTEGRAL, statement, lhs, rhs, quote, tol, ("integral", *tags), notes
    )


def _amm_12256(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: math.log1p(x) * math.log1p(-x) / x,
        Interval.finite(0, 1, singular=(False, True)),
        ctx,
    )


def _amm_12288(ctx: EvalContext) -> types.NumericResult:
    def f(x: float) -> float:
        if x < 1.0:
            return (sinc_minus_one(x) / x * (1.0 + math.sin(x) / x)) ** 2
        s = math.sin(x)
        return ((x - s) * (x + s)) ** 2 / x**6

    return oscillating_half_line(
        f,
        PI,
        ctx.budget(_PERIODS, floor=100),
        tail=lambda x: 1.0 / x - 1.0 / (3.0 * x**3),
        tail_err=lambda x: 2.0 / x**5,
        ctx=ctx,
    )


# f = a/4 x^4 - a/2 x^2 + c with a = -105/4, c = -33/16
_EXTREMAL_QUARTIC = Poly.of(F(-33, 16), 0, F(105, 8), 0, F(-105, 16))


def _quartic_kkt_minimum() -> float:
    """Minimum of int_0^1 f'^2 over polynomials of degree <= 4 with int f = int x^2 f = 1."""
    n = 5
    gram = np.array(
        [[i * j / (i + j - 1) if i and j else 0.0 for j in range(n)] for i in range(n)]
    )
    constraints = np.array([[1.0 / (j + 1) for j in range(n)], [1.0 / (j + 3) for j in range(n)]])
    kkt = np.block([[2 * gram, constraints.T], [constraints, np.zeros((2, 2))]])
    rhs = np.concatenate([np.zeros(n), np.ones(2)])
    coeffs = np.linalg.solve(kkt, rhs)[:n]
    return float(coeffs @ gram @ coeffs)


def _amm_12308(ctx: EvalContext) -> types.NumericResult:
    p = _EXTREMAL_QUARTIC
    slope = p.derivative()
    energy = quad(lambda x: slope(x) ** 2, Interval.finite(0, 1), ctx)
    side = abs(p.integrate(0, 1) - 1) + abs((p * Poly.monomial(2)).integrate(0, 1) - 1)
    gap = abs(_quartic_kkt_minimum() - energy.value)
    return types.NumericResult(energy.value, energy.err + gap + float(side), energy.evaluations)


def _amm_12338(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: -2.0 * math.sin(x / 2) ** 2 / (x * math.expm1(x)), Interval.semi_infinite(0), ctx
    )


def _amm_12372(ctx: EvalContext) -> types.NumericResult:
    # x^3 - (1 - x)^3 = (2x - 1)(1 - x + x^2)
    return quad(
        lambda x: (math.log(abs(2 * x - 1)) + math.log(1 - x + x * x)) / x,
        Interval.finite(0, 1, split_points=(0.5,)),
        ctx,
    )


def _amm_12388(ctx: EvalContext) -> types.NumericResult:
    a = PI / 2
    return quad(
        lambda x: math.log(x) ** 2 * math.atan(x) / (1 - 2 * x * math.cos(a) + x * x),
        Interval.semi_infinite(0, singular=(True, True)),
        ctx,
    )


def _amm_12407(ctx: EvalContext) -> types.NumericResult:
    r = 3
    return quad(
        lambda x: x ** (r - 1) / ((1 + x * x) * (1 + x ** (2 * r))), Interval.semi_infinite(0), ctx
    )


def _amm_12433(s: int):
    def lhs(ctx: EvalContext) -> types.NumericResult:
        _, im = integrate_complex(
            lambda t: math.tanh(PI * t) / (0.5 + 1j * t) ** s,
            Interval.real_line(),
            ctx.quad_options(),
        )
        return im.scaled(-0.5)

    lhs.__name__ = f"amm_12433_x{s}"
    return lhs


def _amm_12459(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: (dilog(-x * x) + dilog(-1.0 / (x * x))) / (1 + x * x),
        Interval.semi_infinite(0, singular=(True, True)),
        ctx,
    )


def _amm_12494(ctx: EvalContext) -> types.NumericResult:
    r = 3
    return quad(
        lambda x: x ** (r - 1) * math.log1p(-x) ** 2,
        Interval.finite(0, 1, singular=(False, True)),
        ctx,
    )


def _amm_12501(ctx: EvalContext) -> types.NumericResult:
    # t = x / (1 + x): dx / (1 + x) = dt / (1 - t), log(x^3 (1 + x)^17) = 3 log t - 20 log(1 - t)
    def f(t: float, tc: float) -> float:
        s = tc if tc > 0 else 1.0 - t
        log_t = math.log1p(-s) if tc > 0 else math.log(t)
        return log_t**4 * (3 * log_t - 20 * math.log(s)) / s

    return quad(f, Interval.finite(0, 1, singular=(True, True)), ctx, complement=True)


def _amm_12509(ctx: EvalContext) -> types.NumericResult:
    n = 1
    return quad(
        lambda x: math.log(x) / math.prod(x * x + (2 * k + 1) ** 2 for k in range(n + 1)),
        Interval.semi_infinite(0, singular=(True, False)),
        ctx,
    )


def _amm_12521(ctx: EvalContext) -> types.NumericResult:
    a = 3
    return quad(lambda x: 1.0 / (1 + x**a), Interval.semi_infinite(0), ctx)


def _amm_12527(ctx: EvalContext) -> types.NumericResult:
    def f(theta: float) -> float:
        u = math.tan(theta) ** 2
        return math.tanh(u) / (math.sin(2 * theta) * (1 + math.cosh(2 * u)))

    return quad(f, Interval.finite(0, PI / 2, singular=(False, True)), ctx)


def _amm_12534(ctx: EvalContext) -> types.NumericResult:
    def f(x: float) -> float:
        plus, minus = math.log1p(x), math.log1p(-x)
        return (6 * plus**2 * minus**2 + plus**4) / x

    return quad(f, Interval.finite(0, 1, singular=(False, True)), ctx)


# p'' = (1 + t)^2 on [-1, 0] and (1 - t)^2 on [0, 1], p(0) = p'(0) = 0
_LEFT_QUARTIC = Poly.of(0, 0, F(1, 2), F(1, 3), F(1, 12))
_RIGHT_QUARTIC = Poly.of(0, 0, F(1, 2), F(-1, 3), F(1, 12))


def _piecewise(left: Poly, right: Poly):
    return lambda t: left(t) if t < 0 else right(t)


def _amm_11548_mean(ctx: EvalContext) -> types.NumericResult:
    area = quad(
        _piecewise(_LEFT_QUARTIC, _RIGHT_QUARTIC), Interval.finite(-1, 1, split_points=(0,)), ctx
    )
    return types.NumericResult(area.value**2, 2 * abs(area.value) * area.err, area.evaluations)


def _amm_11548_energy(ctx: EvalContext) -> types.NumericResult:
    curvature = _piecewise(_LEFT_QUARTIC.derivative(2), _RIGHT_QUARTIC.derivative(2))
    energy = quad(lambda t: curvature(t) ** 2, Interval.finite(-1, 1, split_points=(0,)), ctx)
    return energy.scaled(0.1)


def _mm_2141(ctx: EvalContext) -> types.NumericResult:
    c = math.cos(PI / 3)

    def f(x: float) -> float:
        if x >= 1.0:
            return math.log1p((2 * c + 1 / (x * x)) / (x * x))
        return math.log(x**4 + 2 * c * x * x + 1) - 4 * math.log(x)

    return quad(f, Interval.semi_infinite(0, singular=(True, False)), ctx)


def _mm_2176(ctx: EvalContext) -> types.NumericResult:
    return quad(lambda x: math.log(1 + x + x * x) / (1 + x * x), Interval.finite(0, 1), ctx)


def _mm_2181(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: -2.0 * math.exp(-x) * math.sin(x / 2) ** 2 / x, Interval.semi_infinite(0), ctx
    )


def _legendre_like(n: int):
    """P_n with d^n/dx^n 1/(1+x^2) = n! P_n(x) / (1+x^2)^(n+1)."""
    scale = (-1) ** n * 1j**n / 2

    def p(x: float) -> float:
        return (scale * ((1 - 1j * x) ** (n + 1) + (-1) ** n * (1 + 1j * x) ** (n + 1))).real

    return p


def _mm_2185(ctx: EvalContext) -> types.NumericResult:
    return quad(_legendre_like(4), Interval.finite(-1, 1), ctx)


def _mm_2186_artanh(ctx: EvalContext) -> types.NumericResult:
    def f(x: float) -> float:
        y = x * math.sqrt(2 - x * x)
        # artanh y = log((1 + y) / (1 - x^2)) since 1 - y^2 = (1 - x^2)^2
        return (math.log1p(y) - math.log1p(-x) - math.log1p(x)) / x

    return quad(f, Interval.finite(0, 1, singular=(False, True)), ctx)


def _mm_2186_arctan(ctx: EvalContext) -> types.NumericResult:
    return quad(lambda x: math.atan(x * math.sqrt(2 - x * x)) / x, Interval.finite(0, 1), ctx)


def _cosine_gap_kinks(n: int) -> tuple:
    """Interior zeros of cos x - cos nx on (0, pi)."""
    kinks = set()
    for m in (n - 1, n + 1):
        kinks.update(2 * PI * k / m for k in range(1, m) if 2 * k < m)
    return tuple(sorted(kinks))


def _mm_2191(ctx: EvalContext) -> types.NumericResult:
    n = 3
    return quad(
        lambda x: abs(math.cos(x) - math.cos(n * x)),
        Interval.finite(0, PI, split_points=_cosine_gap_kinks(n)),
        ctx,
    )


def _mm_2202_cos(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda t: math.cos(math.cos(t)) * math.cosh(math.sin(t)), Interval.finite(0, 2 * PI), ctx
    )


def _mm_2202_sin(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda t: math.sin(math.cos(t)) * math.cosh(math.sin(t)), Interval.finite(0, 2 * PI), ctx
    )


def _mm_2223(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: (1 - x) * math.log(x) ** 2 / (1 + x**3),
        Interval.finite(0, 1, singular=(True, False)),
        ctx,
    )


def _y_coth_y_minus_one(y: float) -> float:
    if y < 0.1:
        y2 = y * y
        return y2 * (1 / 3 - y2 * (1 / 45 - y2 * (2 / 945 - y2 / 4725)))
    return y / math.tanh(y) - 1


def _cmj_1295(ctx: EvalContext) -> types.NumericResult:
    # coth(pi x)/x - 1/(pi x^2) = (pi x coth(pi x) - 1) / (pi x^2)
    return quad(
        lambda x: (_y_coth_y_minus_one(PI * x) / (PI * x * x)) ** 2,
        Interval.semi_infinite(0, singular=(False, True)),
        ctx,
    )


def _crux_4828(ctx: EvalContext) -> types.NumericResult:
    quarter = PI / 4

    def f(x: float, xc: float) -> float:
        # sqrt2 cos x - 1 = 2 sqrt2 sin((x + pi/4)/2) sin((pi/4 - x)/2)
        gap = xc if xc > 0 else quarter - x
        below = 2 * math.sqrt(2) * math.sin((x + quarter) / 2) * math.sin(gap / 2)
        return 0.5 * (math.log(math.sqrt(2) * math.cos(x) + 1) - math.log(below))

    return quad(f, Interval.finite(0, quarter, singular=(False, True)), ctx, complement=True)


def _crux_4910(m: int):
    # oscillating part of the tail from X = N pi
    leading = {1: lambda x: math.cos(x) / x**3, 2: lambda x: 1 / (6 * x**3), 3: lambda x: 0.0}[m]

    def f(x: float) -> float:
        if x < 1.0:
            d = sinc_minus_one(x)
            # (S^m - 1) = (S - 1)(1 + S + ... + S^(m-1))
            return d / (x * x) * math.fsum((1 + d) ** j for j in range(m))
        return ((math.sin(x) / x) ** m - 1) / (x * x)

    def lhs(ctx: EvalContext) -> types.NumericResult:
        return oscillating_half_line(
            f,
            PI,
            ctx.budget(_PERIODS, floor=100),
            tail=lambda x: -1.0 / x + leading(x),
            tail_err=lambda x: 20.0 / x**4,
            ctx=ctx,
        )

    lhs.__name__ = f"crux_4910_m{m}"
    return lhs


def _crux_4920(ctx: EvalContext) -> types.NumericResult:
    k, n = 2, 3
    return quad(
        lambda x: math.log(math.fsum(x ** (k * j) for j in range(n + 1))) / x,
        Interval.finite(0, 1),
        ctx,
    )


def _crux_4929(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda u: math.log1p(math.sqrt((1 - u) * (1 + u))) / (1 + u),
        Interval.finite(0, 1, singular=(False, True)),
        ctx,
    )


def _elem_1443(ctx: EvalContext) -> types.NumericResult:
    root2 = math.sqrt(2)

    def f(v: float, vc: float) -> float:
        # vc = 1 - v next to 1, root2 - v next to root2
        below, above = (v - 1, vc) if vc > 0 else (-vc, root2 - v)
        return math.log((v + 1) / below) / math.sqrt(above * (root2 + v))

    return quad(f, Interval.finite(1, root2, singular=(True, True)), ctx, complement=True)


def _elem_1455(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda t: t * math.log(math.tan(t)), Interval.finite(0, PI / 4, singular=(True, False)), ctx
    )


def _gaz_108d_laplace(ctx: EvalContext) -> types.NumericResult:
    def f(x: float) -> float:
        return -math.expm1(-2 * x) * (math.sin(x) / x) ** 2 / x

    return oscillating_half_line(
        f,
        PI,
        ctx.budget(_PERIODS, floor=100),
        tail=lambda x: 1.0 / (4 * x * x),
        tail_err=lambda x: 1.0 / x**4,
        ctx=ctx,
    )


def _gaz_108d_tangent(ctx: EvalContext) -> types.NumericResult:
    # Lobachevsky: the integral over R equals pi/2 + int_0^inf cos(2s)/(1+s^2) ds
    def f(s: float) -> float:
        return math.cos(2 * s) / (1 + s * s)

    head = quad(f, Interval.finite(0, PI / 4), ctx)
    rest = alternating_pieces(f, PI / 4, PI / 2, ctx)
    return types.combine([head, rest]).shifted(PI / 2)


def _gaz_108h_sine(ctx: EvalContext) -> types.NumericResult:
    return quad(lambda x: x * (PI - x) / math.sin(x), Interval.finite(0, PI), ctx)


def _gaz_108h_arctan(ctx: EvalContext) -> types.NumericResult:
    return quad(
        lambda x: math.atan(math.exp(x)) * math.atan(math.exp(-x)), Interval.real_line(), ctx
    )


PI_SQ = cf.pow_("pi", 2)

ENTRIES = (
    _integral(
        "amm-12256",
        "12256",
        "int_0^1 log(1+x) log(1-x) / x dx",
        _amm_12256,
        cf.mul(cf.num(-5, 8), "zeta3"),
        r"-\frac{5}{8}\xi(3)",
        notes="the published right side writes xi(3); the derivation computes zeta(3)",
    ),
    _integral(
        "amm-12288",
        "12288",
        "int_0^inf (x^2 - sin^2 x)^2 / x^6 dx",
        _amm_12288,
        cf.div("pi", 5),
        "original integral J is π/5",
        tags=("oscillatory",),
    ),
    _integral(
        "amm-12308",
        "12308",
        "min int_0^1 f'^2 over f with int_0^1 f = int_0^1 x^2 f = 1",
        _amm_12308,
        F(105, 2),
        "minimal value is given by $105/2$",
        tol=1e-8,
        tags=("extremal",),
    ),
    _integral(
        "amm-12338",
        "12338",
        "int_0^inf (cos x - 1) / (x (e^x - 1)) dx",
        _amm_12338,
        cf.mul(cf.num(1, 2), cf.log(cf.div("pi", cf.sinh("pi")))),
        r"\frac{1}{2} \log\left(\frac{\pi}{\sinh \pi}\right)",
    ),
    _integral(
        "amm-12372",
        "12372",
        "int_0^1 log|x^3 - (1-x)^3| / x dx",
        _amm_12372,
        cf.mul(cf.num(-11, 36), PI_SQ),
        r"-\frac{a^2+2}{12 a}\;\pi^2",
        tags=("split",),
    ),
    _integral(
        "amm-12388",
        "12388",
        "int_0^inf log^2 x arctan x / (1 - 2x cos a + x^2) dx at a = pi/2",
        _amm_12388,
        cf.div(cf.pow_("pi", 4), 32),
        r"\frac{(2\pi-a)(\pi-a)}{12}",
    ),
    _integral(
        "amm-12407",
        "12407",
        "int_0^inf x^(r-1) / ((1+x^2)(1+x^(2r))) dx at r = 3",
        _amm_12407,
        cf.div("pi", 12),
        r"I(r)=\frac{\pi}{4r}",
    ),
    _integral(
        "amm-12433x2",
        "12433",
        "(i/2) int_R tanh(pi t) / (1/2 + i t)^2 dt",
        _amm_12433(2),
        cf.div(PI_SQ, 6),
        r"=\zeta(x)",
        tol=1e-6,
        tags=("complex",),
    ),
    _integral(
        "amm-12433x3",
        "12433",
        "(i/2) int_R tanh(pi t) / (1/2 + i t)^3 dt",
        _amm_12433(3),
        cf.const("zeta3"),
        r"=\zeta(x)",
        tol=1e-6,
        tags=("complex",),
    ),
    _integral(
        "amm-12459",
        "12459",
        "int_0^inf (Li2(-x^a) + Li2(-x^-a)) / (1 + x^a) dx at a = 2",
        _amm_12459,
        cf.neg(cf.div(cf.pow_("pi", 3), 3)),
        r"\frac{\pi^3}{3a}  \left( \frac{\sin^2(\pi/a)-3}{\sin^3 (\pi/a)}\right)",
        tags=("dilog",),
    ),
    _integral(
        "amm-12494",
        "12494",
        "int_0^1 x^(r-1) log^2(1-x) dx at r = 3",
        _amm_12494,
        F(85, 54),
        "(H_r)^2+H_r^{(2)}",
    ),
    _integral(
        "amm-12501",
        "12501",
        "int_0^inf log^4(x/(1+x)) log(x^3 (1+x)^17) / (1+x) dx",
        _amm_12501,
        cf.mul(-240, cf.pow_("zeta3", 2)),
        r"=-240 \zeta(3)^2",
        tol=1e-9,
    ),
    _integral(
        "amm-12509",
        "12509",
        "int_0^inf log(a x) / prod_{k<=n} (x^2 + (2k+1)^2) dx at n = 1, a = 1",
        _amm_12509,
        cf.neg(cf.div(cf.mul("pi", cf.log(3)), 48)),
        r"\frac{\pi }{{{2}^{2n+1}}}\sum",
    ),
    _integral(
        "amm-12521",
        "12521",
        "int_0^inf x^s log^m x / (1 + x^a) dx at a = 3, s = m = 0",
        _amm_12521,
        cf.div(cf.mul(2, "pi"), cf.mul(3, "sqrt3")),
        r"F(s)=\frac{\pi}{a} \csc",
    ),
    _integral(
        "amm-12527",
        "12527",
        "int_0^(pi/2) tanh(tan^2 t) / (sin 2t (1 + cosh(2 tan^2 t))) dt",
        _amm_12527,
        cf.div(cf.mul(7, "zeta3"), cf.mul(8, PI_SQ)),
        r"\frac{7\zeta(3)}{8\pi^2}",
    ),
    _integral(
        "amm-12534",
        "12534",
        "int_0^1 (6 log^2(1+x) log^2(1-x) + log^4(1+x)) / x dx",
        _amm_12534,
        cf.mul(cf.num(21, 4), "zeta5"),
        r"\frac{21}{4}\zeta(5)",
    ),
    _integral(
        "amm-11548a",
        "11548",
        "(int_{-1}^1 p)^2 for the extremal piecewise quartic p",
        _amm_11548_mean,
        F(1, 25),
        r"=\frac{1}{10}\int_{-1}^1 (p''(x))^2 dx=\frac{1}{25}",
        tags=("extremal",),
    ),
    _integral(
        "amm-11548b",
        "11548",
        "(1/10) int_{-1}^1 p''^2 for the extremal piecewise quartic p",
        _amm_11548_energy,
        F(1, 25),
        r"=\frac{1}{10}\int_{-1}^1 (p''(x))^2 dx=\frac{1}{25}",
        tags=("extremal",),
    ),
    _integral(
        "mm-2141",
        "2141",
        "int_0^inf log(1 + 2 cos(phi) / x^2 + 1/x^4) dx at phi = pi/3",
        _mm_2141,
        cf.mul("pi", "sqrt3"),
        r"2\pi \cos(\varphi/2)",
    ),
    _integral(
        "mm-2176",
        "2176",
        "int_0^1 log(1 + x + x^2) / (1 + x^2) dx",
        _mm_2176,
        cf.add(
            cf.neg(cf.div("catalan", 3)),
            cf.mul(cf.div("pi", 6), cf.log(cf.add(2, "sqrt3"))),
        ),
        r"-\frac{1}{3} C +\frac{\pi}{6} \log(2+\sqrt 3)",
    ),
    _integral(
        "mm-2181",
        "2181",
        "int_0^inf e^-x (cos x - 1) / x dx",
        _mm_2181,
        cf.mul(cf.num(-1, 2), "log2"),
        r"J=- \frac{1}{2}\log 2",
    ),
    _integral(
        "mm-2185",
        "2185",
        "int_{-1}^1 P_n(x) dx at n = 4, with (1/(1+x^2))^(n) = n! P_n / (1+x^2)^(n+1)",
        _mm_2185,
        F(-8, 3),
        r"\varepsilon_n\, \frac{2^\frac{n+4}{2}}{n+2}",
    ),
    _integral(
        "mm-2186a",
        "2186",
        "int_0^1 artanh(x sqrt(2 - x^2)) / x dx",
        _mm_2186_artanh,
        cf.mul(cf.num(3, 16), PI_SQ),
        r"\frac{3}{16}\pi^2\sim 1.850550825204",
    ),
    _integral(
        "mm-2186b",
        "2186",
        "int_0^1 arctan(x sqrt(2 - x^2)) / x dx",
        _mm_2186_arctan,
        cf.add(cf.div("catalan", 2), cf.mul(cf.div("pi", 4), cf.log(cf.add(1, "sqrt2")))),
        r"\sim 1.15021199360",
    ),
    _integral(
        "mm-2191",
        "2191",
        "int_0^pi |cos x - cos(nx)| dx at n = 3",
        _mm_2191,
        F(8, 3),
        r"A_3=\frac{8}{3}",
        tags=("split",),
    ),
    _integral(
        "mm-2202a",
        "2202",
        "int_0^(2pi) cos(cos t) cosh(sin t) dt",
        _mm_2202_cos,
        cf.mul(2, "pi"),
        r"cosh(\sin t)\;dt=2\pi",
    ),
    _integral(
        "mm-2202b",
        "2202",
        "int_0^(2pi) sin(cos t) cosh(sin t) dt",
        _mm_2202_sin,
        F(0),
        "I_2=...=0",
    ),
    _integral(
        "mm-2223",
        "2223",
        "int_0^1 (1 - x) log^2 x / (1 + x^3) dx",
        _mm_2223,
        cf.mul(cf.num(13, 9), "zeta3"),
        r"\frac{13}{9}\zeta(3)\sim 1.7363044156",
    ),
    _integral(
        "cmj-1295",
        "1295",
        "int_0^inf (coth(pi x)/x - 1/(pi x^2))^2 dx",
        _cmj_1295,
        cf.div(cf.mul(4, "zeta3"), "pi"),
        r"\frac{4 \zeta(3)}{\pi}",
    ),
    _integral(
        "crux-4828",
        "4828",
        "int_0^(pi/4) int_0^(pi/4) cos x cos y / (cos(x+y) cos(x-y)) dy dx",
        _crux_4828,
        cf.const("catalan"),
        "=C",
    ),
    _integral(
        "crux-4910m1",
        "4910",
        "int_0^inf ((sin x / x)^m - 1) / x^2 dx at m = 1",
        _crux_4910(1),
        cf.neg(cf.div("pi", 4)),
        r"I(1)=-\frac{\pi}{4}",
        tags=("oscillatory",),
    ),
    _integral(
        "crux-4910m2",
        "4910",
        "int_0^inf ((sin x / x)^m - 1) / x^2 dx at m = 2",
        _crux_4910(2),
        cf.neg(cf.div("pi", 3)),
        r"I(1)=-\frac{\pi}{4}",
        tags=("oscillatory",),
    ),
    _integral(
        "crux-4910m3",
        "4910",
        "int_0^inf ((sin x / x)^m - 1) / x^2 dx at m = 3",
        _crux_4910(3),
        cf.neg(cf.mul(cf.num(13, 32), "pi")),
        r"I(1)=-\frac{\pi}{4}",
        tags=("oscillatory",),
    ),
    _integral(
        "crux-4920",
        "4920",
        "int_0^1 log(1 + x^k + ... + x^(nk)) / x dx at k = 2, n = 3",
        _crux_4920,
        cf.div(PI_SQ, 16),
        r"\frac{\pi^2}{6} \frac{n}{k(n+1)}",
    ),
    _integral(
        "crux-4929",
        "4929",
        "int_0^1 log(1 + sqrt(1 - u^2)) / (1 + u) du",
        _crux_4929,
        cf.div(PI_SQ, 24),
        r"\frac{\pi^2}{24}\sim 0.4112335167",
    ),
    _integral(
        "elem-1443",
        "1443",
        "int_1^sqrt2 log((v+1)/(v-1)) / sqrt(2 - v^2) dv",
        _elem_1443,
        cf.mul(2, "catalan"),
        r"2C= \int_1^{\sqrt 2}",
    ),
    _integral(
        "elem-1455",
        "1455",
        "int_0^(pi/4) t log(tan t) dt",
        _elem_1455,
        cf.sub(cf.mul(cf.num(7, 16), "zeta3"), cf.mul(cf.div("pi", 4), "catalan")),
        r"\frac{7}{16}\zeta(3)-\frac{\pi}{4}\; C",
    ),
    _integral(
        "gaz-108Da",
        "108.D",
        "int_0^inf (1 - e^(-2x)) sin^2 x / x^3 dx",
        _gaz_108d_laplace,
        cf.div("pi", 2),
        r"Consequently, $I=\pi/2 $",
        tags=("oscillatory",),
    ),
    _integral(
        "gaz-108Db",
        "108.D",
        "int_R cos^2(tan x) sin^2 x / x^2 dx",
        _gaz_108d_tangent,
        cf.mul(cf.div("pi", 2), cf.add(1, cf.exp(-2))),
        r"\frac{\pi}{2}\left(1+ \frac{1}{e^2}\right)",
        tags=("oscillatory",),
    ),
    _integral(
        "gaz-108Ha",
        "108.H",
        "int_0^pi x (pi - x) / sin x dx",
        _gaz_108h_sine,
        cf.mul(7, "zeta3"),
        r"=7\zeta(3)",
    ),
    _integral(
        "gaz-108Hb",
        "108.H",
        "int_R arctan(e^x) arctan(e^-x) dx",
        _gaz_108h_arctan,
        cf.mul(cf.num(7, 4), "zeta3"),
        r"I_2 ... \frac{1}{4}  I_1",
    ),
)
