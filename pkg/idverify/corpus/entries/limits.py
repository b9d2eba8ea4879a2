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
"""Limits of sequences, estimated by extrapolation over n = n0 * 2^k."""

import fractions
import functools
import itertools
import math

import numpy as np

from idverify import types
from idverify.constants import closed_form as cf
from idverify.corpus.entries.common import entry, power_series
from idverify.corpus.identity import ONE, Category, EvalContext
from idverify.quad import Interval, integrate
from idverify.seqsum import Method, limit_extrapolate, sum_alternating
from idverify.specfun import log_gamma

F = fractions.Fraction
LIMIT_TOL = 1e-5
# integrals inside a sequence are taken well below LIMIT_TOL; Richardson amplifies their noise
_INNER_TOL = 1e-12
_SQRT2 = math.sqrt(2.0)


def _limit(id, problem, statement, lhs, rhs, quote, tol=LIMIT_TOL, tags=(), notes=""):
    return entry(
        id, problem, Category.LIMIT, statement, lhs, rhs, quote, tol, ("limit", *tags), notes
    )


def _peak(a: float, b: float, n: int) -> float:
    """n / (a^n + b^n) for a, b >= 0 with max(a, b) >= 1, without overflow."""
    hi, lo = max(a, b), min(a, b)
    return n * math.exp(-n * math.log(hi)) / (1.0 + (lo / hi) ** n)


def _amm_12340(ctx: EvalContext) -> types.NumericResult:
    options = ctx.quad_options(_INNER_TOL)

    def seq(n):
        # (n / 2^n) / (x^n + (1 - x)^n) = n / ((2x)^n + (2 - 2x)^n)
        iv = Interval.finite(0.0, 1.0, split_points=(0.5 - 4.0 / n, 0.5, 0.5 + 4.0 / n))
        return integrate(lambda x: math.exp(x) * _peak(2 * x, 2 - 2 * x, n), iv, options).value

    return limit_extrapolate(seq, 16, 5)


def _amm_12362(ctx: EvalContext) -> types.NumericResult:
    options = ctx.quad_options(_INNER_TOL)
    mid = math.pi / 4

    def seq(n):
        # the peak at pi/4 has width 1/n; resolve it on three scales
        offsets = [c / n for c in (4.0, 16.0, 64.0) if c / n < mid]
        splits = sorted({mid, *(mid - d for d in offsets), *(mid + d for d in offsets)})
        iv = Interval.finite(0.0, math.pi / 2, split_points=splits)
        return integrate(
            lambda x: _peak(_SQRT2 * math.cos(x), _SQRT2 * math.sin(x), n), iv, options
        ).value

    return limit_extrapolate(seq, 32, 7)


def _amm_12510(ctx: EvalContext) -> types.NumericResult:
    c = 2.0

    def seq(n):
        r = math.sqrt(c)
        f = 1.0 / r
        for _ in range(n - 1):
            r = math.sqrt(c + r)
            f = (f + 1.0) / r
        return f

    return limit_extrapolate(seq, 4, 4, Method.AITKEN)


def _amm_12518(ctx: EvalContext) -> types.NumericResult:
    v = (math.sqrt(3) + 1) / (math.sqrt(3) - 1)

    def seq(n):
        angles = []
        for k in range(1, 6 * n + 1):
            j = (k - 1) ** 2
            angles.append(math.atan((v * j + 2) / (j - 2 * v)))
        return n * math.sin(4 * math.fsum(angles))

    return limit_extrapolate(seq, 8, 5)


def _log_factor_11333(n: int) -> float:
    """log of ((n^2 - 1)/n^2)^(2(n^2 - 1)) ((n + 1)/(n - 1))^n as a series in 1/n^2."""
    return 2 * power_series(1.0 / (n * n), lambda k: 1.0 / (k * (k + 1)) + 1.0 / (2 * k + 1))


def _amm_11333(ctx: EvalContext) -> types.NumericResult:
    n0, k_max = 8, 7
    logs = [0.0, 0.0] + [_log_factor_11333(n) for n in range(2, n0 * 2**k_max + 1)]
    prefix = list(itertools.accumulate(logs))
    return limit_extrapolate(lambda n: math.exp(prefix[n]), n0, k_max)


def _amm_11456(ctx: EvalContext) -> types.NumericResult:
    n0, k_max = 8, 6
    logs = [0.0] + [math.log1p(-1.0 / m + 1.25 / (m * m)) for m in range(1, n0 * 2**k_max + 1)]
    prefix = list(itertools.accumulate(logs))
    return limit_extrapolate(lambda n: n * math.exp(prefix[n]), n0, k_max)


def _mm_2212(ctx: EvalContext) -> types.NumericResult:
    def seq(n):
        k = np.arange(1, n + 1, dtype=float)
        return math.fsum(np.arcsinh(1.0 / np.sqrt(n * n + k * k)).tolist())

    return limit_extrapolate(seq, 8, 6)


def _mm_2216(ctx: EvalContext) -> types.NumericResult:
    options = ctx.quad_options(_INNER_TOL)

    def seq(n):
        def f(x):
            if x >= 1.0:
                return 0.0
            # (1 - x)^(2n) ((1 + x)^n - 1) = (1 - x)^(2n) (1 + x)^n (1 - (1 + x)^-n)
            up = n * math.log1p(x)
            return math.exp(2 * n * math.log1p(-x) + up) * -math.expm1(-up) / x

        iv = Interval.finite(0.0, 1.0, split_points=(1.0 / n, 8.0 / n))
        return integrate(f, iv, options).value

    return limit_extrapolate(seq, 16, 6)


def _cmj_1294(ctx: EvalContext) -> types.NumericResult:
    def seq(n):
        return math.fsum(2 * k / n**2 for k in range(1, n + 1)) ** n

    return limit_extrapolate(seq, 8, 6)


def _crux_4862(ctx: EvalContext) -> types.NumericResult:
    m = 2

    def seq(n):
        total = sum(math.comb(m + k, k) * math.comb(m + n + 1, n - k) for k in range(n + 1))
        return float(F(total, 2**n * n**m))

    return limit_extrapolate(seq, 8, 6)


def _crux_4870(ctx: EvalContext) -> types.NumericResult:
    q, n0, k_max = 3.0, 256, 10
    a = [0.0, 1.0]
    for _ in range(n0 * 2**k_max - 1):
        a.append(a[-1] + 1.0 / (q * a[-1]))

    # a_n^2 = 2n/q + log(n)/(2q) + C + O(log(n)/n)
    basis = (
        lambda n: 1.0,
        lambda n: math.log(n) / math.sqrt(n),
        lambda n: 1.0 / math.sqrt(n),
        lambda n: math.log(n) ** 2 / n**1.5,
        lambda n: math.log(n) / n**1.5,
        lambda n: 1.0 / n**1.5,
    )
    return limit_extrapolate(
        lambda n: a[n] - math.sqrt(2 * n / q), n0, k_max, Method.LOG_FIT, basis=basis
    )


@functools.lru_cache(maxsize=64)
def _root_offset_4909(n: int) -> float:
    """d = x_n - 2n - 1 for the root x_n > 2n of (x - 1)^(2n+1) (x^2 - (2n+1)x - 1) = 1."""
    d = 0.0
    for _ in range(100):
        x = 2 * n + 1 + d
        nxt = (1.0 + math.exp(-(2 * n + 1) * math.log(x - 1))) / x
        if nxt == d:
            break
        d = nxt
    return d


def _crux_4909_shift(ctx: EvalContext) -> types.NumericResult:
    return limit_extrapolate(lambda n: 1.0 + _root_offset_4909(n), 8, 6)


def _crux_4909_scaled(ctx: EvalContext) -> types.NumericResult:
    return limit_extrapolate(lambda n: n * _root_offset_4909(n), 8, 6)


def _crux_4915(ctx: EvalContext) -> types.NumericResult:
    log2 = math.log(2)

    def seq(n):
        s = sum_alternating(lambda k: 1.0 / (k * (k + n + 1)), 1, ctx.target).value
        return n**3 * s - (log2 * n * n + (-0.5 - log2) * n + log2 + 1.25)

    return limit_extrapolate(seq, 32, 5)


def _crux_4959(ctx: EvalContext) -> types.NumericResult:
    alpha = 1.5

    def seq(n):
        k = np.arange(1, 2 * n + 1)
        terms = np.where(k % 2 == 0, 1.0, -1.0) * (k / (2 * n)) ** alpha
        return math.fsum(terms.tolist())

    # Euler-Maclaurin leaves n^-1, n^-alpha and then odd powers of 1/n
    return limit_extrapolate(seq, 8, 6, exponents=(1, alpha, 3, 5, 7, 9))


def _gaz_108g(ctx: EvalContext) -> types.NumericResult:
    n0, k_max = 1024, 7
    log_half_root_pi = 0.5 * math.log(math.pi) - math.log(2)
    logs = [0.0] + [
        log_half_root_pi + log_gamma((k + 1) / 2) - log_gamma(k / 2 + 1)
        for k in range(1, n0 * 2**k_max + 1)
    ]
    prefix = list(itertools.accumulate(logs))
    basis = (
        lambda n: 1.0,
        lambda n: math.log(n) / n,
        lambda n: 1.0 / n,
        lambda n: math.log(n) ** 2 / n**2,
        lambda n: math.log(n) / n**2,
        lambda n: 1.0 / n**2,
    )
    return limit_extrapolate(
        lambda n: n * math.exp(2.0 / n * prefix[n]), n0, k_max, Method.LOG_FIT, basis=basis
    )


ENTRIES = (
    _limit(
        "amm-12340",
        "12340",
        "lim (n/2^n) int_0^1 e^x / (x^n + (1 - x)^n) dx",
        _amm_12340,
        cf.mul(cf.div("pi", 4), cf.sqrt("e")),
        r"\frac{\pi}{4}\; f\left(\frac{1}{2}\right)",
        notes="general f specialised to f = exp",
    ),
    _limit(
        "amm-12362",
        "12362",
        "lim int_0^{pi/2} n / ((sqrt2 cos x)^n + (sqrt2 sin x)^n) dx",
        _amm_12362,
        cf.div("pi", 2),
        r"=\frac{\pi}{2}",
    ),
    _limit(
        "amm-12510",
        "12510",
        "lim sum_{k<=n} prod_{j=k}^n 1/R_j, R_1 = sqrt2, R_{j+1} = sqrt(2 + R_j)",
        _amm_12510,
        ONE,
        r"\frac{ \frac{1}{2}+ \sqrt{\frac{1}{4}+c}}{c}",
        notes="closed form in c evaluated at c = 2",
    ),
    _limit(
        "amm-12518",
        "12518",
        "lim n sin(4 sum_{k=1}^{6n} arctan u_k)",
        _amm_12518,
        cf.num(4, 3),
        "the limit is $4/3$",
    ),
    _limit(
        "amm-11333",
        "11333",
        "lim prod_{n=2}^N ((n^2 - 1)/n^2)^(2(n^2 - 1)) ((n + 1)/(n - 1))^n",
        _amm_11333,
        cf.const("pi"),
        r"P_N\to \pi",
    ),
    _limit(
        "amm-11456",
        "11456",
        "lim n prod_{m<=n} (1 - 1/m + 5/(4m^2))",
        _amm_11456,
        cf.div(cf.cosh("pi"), "pi"),
        r"\frac{\cosh \pi}{\pi}",
    ),
    _limit(
        "mm-2212",
        "2212",
        "lim sum_{k<=n} arsinh(1/sqrt(n^2 + k^2))",
        _mm_2212,
        cf.log(cf.add(1, cf.sqrt(2))),
        r"\operatorname{arsinh} 1=\log(1+\sqrt 2)",
    ),
    _limit(
        "mm-2216",
        "2216",
        "lim int_0^1 (1 - x)^(2n) ((1 + x)^n - 1) / x dx",
        _mm_2216,
        cf.const("log2"),
        r"$\to \log 2$",
    ),
    _limit(
        "cmj-1294",
        "1294",
        "lim (sum_{k<=n} 2k/n^2)^n",
        _cmj_1294,
        cf.const("e"),
        r"\lim L_n=e",
    ),
    _limit(
        "crux-4862",
        "4862",
        "lim 2^-n n^-m sum_k C(m + k, k) C(m + n + 1, n - k) at m = 2",
        _crux_4862,
        ONE,
        r"\frac{2}{m!}",
    ),
    _limit(
        "crux-4870",
        "4870",
        "a_1 = 1, a_{n+1} = a_n + 1/(3 a_n): lim a_n - sqrt(2n/3)",
        _crux_4870,
        F(0),
        "c(q)=2/q",
        tags=("log-fit",),
        notes="q = 3; the deviation decays like log(n)/sqrt(n)",
    ),
    _limit(
        "crux-4909a",
        "4909",
        "x_n the root > 2n of (x - 1)^(2n+1) (x^2 - (2n+1)x - 1) = 1: lim x_n - 2n",
        _crux_4909_shift,
        ONE,
        r"x_n-2n\to 1",
    ),
    _limit(
        "crux-4909b",
        "4909",
        "same x_n: lim n (x_n - 2n - 1)",
        _crux_4909_scaled,
        F(1, 2),
        r"n\,(x_n-2n-1)",
    ),
    _limit(
        "crux-4915",
        "4915",
        "lim n^3 S_n - (a n^2 + b n + c), S_n = sum_k (-1)^(k+1) / (k(k + n + 1))",
        _crux_4915,
        F(0),
        r"a=\log 2",
        notes="a = log 2, b = -1/2 - log 2, c = log 2 + 5/4",
    ),
    _limit(
        "crux-4959",
        "4959",
        "lim sum_{k=1}^{2n} (-1)^k (k/2n)^(3/2)",
        _crux_4959,
        F(1, 2),
        r"\lim_{n\to\infty} S_n=\frac{1}{2}",
        notes="alpha = 3/2",
    ),
    _limit(
        "gaz-108G",
        "108.G",
        "lim n (prod_{k<=n} int_0^{pi/2} sin^k x dx)^(2/n)",
        _gaz_108g,
        cf.mul(cf.div("pi", 2), "e"),
        r"\frac{\pi}{2}e",
        tags=("log-fit",),
    ),
)
