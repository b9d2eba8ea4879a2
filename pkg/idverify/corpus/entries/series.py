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
"""Infinite series, a double series and infinite products."""

import fractions
import math
import typing

import numpy as np
from scipy import special

from idverify import types
from idverify.constants import closed_form as cf
from idverify.corpus.entries.common import entry, power_series
from idverify.corpus.identity import Category, EvalContext
from idverify.exact import gregory_coefficient, prime_mask
from idverify.quad import Interval, integrate
from idverify.seqsum import (
    TailStrategy,
    product_from_logs,
    sum_alternating,
    sum_double,
    sum_series,
)
from idverify.specfun import harmonic_float, power_tail, trigamma

F = fractions.Fraction
_GAMMA = 0.57721566490153286


def _series(id, problem, statement, lhs, rhs, quote, tol=1e-10, tags=(), notes=""):
    return entry(
        id, problem, Category.SERIES, statement, lhs, rhs, quote, tol, ("series", *tags), notes
    )


def _product(id, problem, statement, lhs, rhs, quote, tol=1e-10, tags=(), notes=""):
    return entry(
        id, problem, Category.PRODUCT, statement, lhs, rhs, quote, tol, ("product", *tags), notes
    )


def _atanh_excess(u: float) -> float:
    """atanh(u)/u - 1."""
    return power_series(u * u, lambda k: 1.0 / (2 * k + 1))


def _harmonic_smooth(x: float) -> float:
    """Asymptotic expansion of H_x, accurate to binary64 for x >= 100."""
    inv2 = 1.0 / (x * x)
    return math.log(x) + _GAMMA + 0.5 / x + inv2 * (-1.0 / 12.0 + inv2 / 120.0)


def _quad_tail(model: typing.Callable[[float], float], ctx: EvalContext):
    """x -> integral of model over [x, inf), for models decaying like a power."""

    def tail(x: float) -> types.NumericResult:
        iv = Interval.semi_infinite(x, singular=(False, True))
        return integrate(model, iv, ctx.quad_options())

    return tail


_MODEL_REFERENCE_TARGET = 1e-10


def _power_model(ctx: EvalContext, alpha: float, n: int = 400) -> TailStrategy:
    """Asymptotic tail with n direct terms at a target of 1e-10.

    The fit error falls like N^-(alpha + 2). The term count follows the target
    with exponent 1/(alpha + 3) and never drops below the profile budget.
    """
    follow = math.ceil(n * (_MODEL_REFERENCE_TARGET / ctx.target) ** (1.0 / (alpha + 3)))
    return TailStrategy.asymptotic_model(
        alpha, max(ctx.budget(n, floor=40), follow), corrections=3
    )


def _amm_12398(ctx: EvalContext) -> types.NumericResult:
    def term(n: int) -> float:
        x = 2.0**n
        # 1/sinh x without overflow
        return 2.0 * math.exp(-x) / -math.expm1(-2.0 * x)

    return sum_series(term, 0, TailStrategy.geometric_ratio(0.5), ctx.target / 10)


def _log_tanh(x: float) -> float:
    e = math.exp(-2.0 * x)
    return math.log1p(-2.0 * e / (1.0 + e))


def _amm_12470(ctx: EvalContext) -> types.NumericResult:
    def term(n: int) -> float:
        return (_log_tanh(2.0**n) - _log_tanh(2.0 ** (n - 1))) / 2.0**n

    return sum_series(term, 1, TailStrategy.geometric_ratio(0.5), ctx.target / 10)


def _mm_2167_series(ctx: EvalContext) -> types.NumericResult:
    # zeta(2m) - 1 is the power tail past k = 1
    return sum_series(
        lambda m: power_tail(2.0 * m, 1) / (m + 2),
        1,
        TailStrategy.geometric_ratio(0.5),
        ctx.target / 10,
    )


def _mm_2167_product(ctx: EvalContext) -> types.NumericResult:
    # 1/2 + j^2 + j^4 log(1 - 1/j^2) = -sum_{m >= 1} j^(-2m) / (m + 2)
    def log_factor(j: int) -> float:
        return -power_series(1.0 / (j * j), lambda m: 1.0 / (m + 2))

    product = product_from_logs(log_factor, 2, _power_model(ctx, 2.0), ctx.target / 10)
    return product.scaled(math.exp(0.5))


def _cosine_remainder(n: int, x: float = 1.0) -> float:
    """cos x minus its Taylor polynomial of degree 2n."""
    return math.fsum((-1) ** k * x ** (2 * k) / math.factorial(2 * k) for k in range(n + 1, n + 16))


def _sine_remainder(n: int, x: float = 1.0) -> float:
    """sin x minus its Taylor polynomial of degree 2n + 1."""
    return math.fsum(
        (-1) ** k * x ** (2 * k + 1) / math.factorial(2 * k + 1) for k in range(n + 1, n + 16)
    )


def _mm_2171_cos(ctx: EvalContext) -> types.NumericResult:
    return sum_series(_cosine_remainder, 0, TailStrategy.geometric_ratio(0.5), ctx.target / 10)


def _mm_2171_sin(ctx: EvalContext) -> types.NumericResult:
    return sum_series(_sine_remainder, 0, TailStrategy.geometric_ratio(0.5), ctx.target / 10)


def _odd_harmonic(n: int) -> float:
    """O_n = 1 + 1/3 + ... + 1/(2n - 1)."""
    return harmonic_float(2 * n) - harmonic_float(n) / 2


def _crux_4825(ctx: EvalContext) -> types.NumericResult:
    def model(x: float) -> float:
        return (_harmonic_smooth(2 * x) - _harmonic_smooth(x) / 2) / (x * (x + 1))

    return sum_series(
        lambda n: _odd_harmonic(n) / (n * (n + 1)),
        1,
        TailStrategy.integral_tail(_quad_tail(model, ctx), ctx.budget(20000, floor=1000)),
        ctx.target,
    )


def _crux_4826(ctx: EvalContext) -> types.NumericResult:
    def model(x: float) -> float:
        return _harmonic_smooth(x) / (x * (x + 1) * (x + 2))

    return sum_series(
        lambda k: harmonic_float(k) / (k * (k + 1) * (k + 2)),
        1,
        TailStrategy.integral_tail(_quad_tail(model, ctx), ctx.budget(4000, floor=400)),
        ctx.target,
    )


def _crux_4894(ctx: EvalContext) -> types.NumericResult:
    """Direct sum closed with a quadrature of the smooth harmonic product.

    The closed-form model ((log x + gamma)^2 + zeta(2)) / x^2 carries a zeta(2) / x^2
    term the summands lack. Over the tail past N = 10^5 that term is worth about
    zeta(2) / N = 1.6e-5, more than the entry tolerance, so the model here is
    H(x - 1) H(x + 1) / (x (x + 1)) with H the asymptotic expansion of H_x.
    """

    def model(x: float) -> float:
        return _harmonic_smooth(x - 1) * _harmonic_smooth(x + 1) / (x * (x + 1))

    return sum_series(
        lambda n: harmonic_float(n - 1) * harmonic_float(n + 1) / (n * (n + 1)),
        1,
        TailStrategy.integral_tail(_quad_tail(model, ctx), ctx.budget(100000, floor=1000)),
        ctx.target,
    )


def _inner_alternating(offset: int, step: int, ctx: EvalContext) -> float:
    """sum_{k >= 0} (-1)^k / (offset + step k)."""
    return sum_alternating(
        lambda k: 1.0 / (offset + step * k), 0, ctx.target / 100, ctx.alternating_terms
    ).value


def _crux_4903(ctx: EvalContext) -> types.NumericResult:
    return sum_series(
        lambda n: _inner_alternating(2 * n - 1, 2, ctx) - 1.0 / (4 * n),
        1,
        _power_model(ctx, 2.0),
        ctx.target,
    )


def _crux_4965_alternating(ctx: EvalContext) -> types.NumericResult:
    return sum_series(
        lambda n: (-1) ** (n - 1) * _inner_alternating(n, 2, ctx) / n,
        1,
        TailStrategy.alternating_accel(ctx.alternating_terms),
        ctx.target,
    )


def _crux_4965_plain(ctx: EvalContext) -> types.NumericResult:
    return sum_series(
        lambda n: _inner_alternating(n, 2, ctx) / n, 1, _power_model(ctx, 2.0), ctx.target
    )


def _crux_4988(ctx: EvalContext) -> types.NumericResult:
    return sum_series(
        lambda n: (2 * n - 1) * trigamma(n) - 2, 1, _power_model(ctx, 2.0, 200), ctx.target
    )


def _residue_class(r: int, alternating: bool):
    """sum_{n >= 0} (+-1)^n / (3n + r)^3."""

    def lhs(ctx: EvalContext) -> types.NumericResult:
        if alternating:
            tail = TailStrategy.alternating_accel(ctx.alternating_terms)
            return sum_series(lambda n: (-1) ** n / (3 * n + r) ** 3, 0, tail, ctx.target)
        return sum_series(lambda n: 1.0 / (3 * n + r) ** 3, 0, _power_model(ctx, 3.0), ctx.target)

    lhs.__name__ = f"elem_1434_{'t' if alternating else 's'}{r}"
    return lhs


def _elem_1437(ctx: EvalContext) -> types.NumericResult:
    # a_0 = -1; from k = 1 on the a_k are positive and decreasing
    rest = sum_series(
        lambda k: (-1) ** k * float(gregory_coefficient(k)),
        1,
        TailStrategy.alternating_accel(ctx.alternating_terms),
        ctx.target,
    )
    return rest.shifted(float(gregory_coefficient(0)))


def _amm_12494_double(ctx: EvalContext) -> types.NumericResult:
    rows = ctx.budget(600, floor=60)
    columns = ctx.budget(600, floor=60)

    def row_tail(m: int) -> TailStrategy:
        # sum over n > N of 1/(m n (m + n)) against log(1 + m/N) / m^2
        return TailStrategy.integral_tail(lambda x: math.log1p(m / x) / (m * m), columns)

    def outer_tail(x: float) -> float:
        # rows sum to H_m / m^2
        return (math.log(x) + 1 + _GAMMA) / x + 1 / (4 * x * x) - 1 / (36 * x**3)

    return sum_double(
        lambda m, n: 1.0 / (m * n * (m + n)),
        TailStrategy.integral_tail(outer_tail, rows),
        ctx.target,
        row_tail=row_tail,
    )


def _mm_2147(ctx: EvalContext) -> types.NumericResult:
    return product_from_logs(
        lambda n: math.log1p(5.0 / (n**4 - 1)), 2, _power_model(ctx, 4.0), ctx.target / 10
    )


def _mm_2187(ctx: EvalContext) -> types.NumericResult:
    r, s = 2.0, 1.0

    def log_factor(n: int) -> float:
        u, v = 2.0**n * s, 2.0**n * r
        # cosh u / cosh v without overflow
        ratio = math.exp(u - v) * (1 + math.exp(-2 * u)) / (1 + math.exp(-2 * v))
        return math.log1p(ratio)

    return product_from_logs(log_factor, 0, TailStrategy.geometric_ratio(0.5), ctx.target / 10)


def _amm_11226(ctx: EvalContext) -> types.NumericResult:
    c = (2.0 / math.pi) ** 4
    return product_from_logs(
        lambda n: math.log1p(-c / (2 * n + 1) ** 4), 0, _power_model(ctx, 4.0), ctx.target / 10
    )


def _amm_10588(ctx: EvalContext) -> types.NumericResult:
    return product_from_logs(
        lambda n: math.log1p(1.0 / n + 0.5 / (n * n)) - 1.0 / n,
        1,
        _power_model(ctx, 3.0),
        ctx.target / 10,
    )


def _amm_10605(ctx: EvalContext) -> types.NumericResult:
    # s = m = 1: prod_{n != 1} (n^2 - 1) / (n^2 + 1)
    return product_from_logs(
        lambda n: math.log1p(-2.0 / (n * n + 1)), 2, _power_model(ctx, 2.0), ctx.target / 10
    )


def _wallis_log_factor(n: int) -> float:
    # 4n(n+1) / (2n+1)^2 = 1 - 1/(2n+1)^2
    return math.log1p(-1.0 / (2 * n + 1) ** 2)


def _crux_4836_all(ctx: EvalContext) -> types.NumericResult:
    return product_from_logs(_wallis_log_factor, 1, _power_model(ctx, 2.0), ctx.target / 10)


def _crux_4836_primes(ctx: EvalContext) -> types.NumericResult:
    """Factors with 2n + 1 prime, sieved up to P and closed with the prime density tail.

    sum_{p > P} 1/p^2 is approximated by the integral of dt / (t^2 log t) over
    [P, inf), which is E1(log P).
    """
    cap = ctx.budget(10**7, floor=10**5)
    odd_primes = np.flatnonzero(prime_mask(cap))[1:].astype(float)
    head = math.fsum(np.log1p(-1.0 / odd_primes**2))
    tail = -float(special.exp1(math.log(cap)))
    tail_err = 2 * abs(tail) * math.log(cap) / math.sqrt(cap)
    log_sum = types.NumericResult(head + tail, tail_err + 1e-16 * len(odd_primes), len(odd_primes))
    value = math.exp(log_sum.value)
    return types.NumericResult(value, value * math.expm1(log_sum.err), log_sum.evaluations)


def _crux_4836_composites(ctx: EvalContext) -> types.NumericResult:
    every = _crux_4836_all(ctx)
    primes = _crux_4836_primes(ctx)
    value = every.value / primes.value
    err = value * (every.err / every.value + primes.err / primes.value)
    return types.NumericResult(value, err, every.evaluations + primes.evaluations)


def _elem_1281_even(ctx: EvalContext) -> types.NumericResult:
    # 2 + n log((n - 1)/(n + 1)) = -2 (atanh(1/n) n - 1)
    return product_from_logs(
        lambda n: -2.0 * _atanh_excess(1.0 / n), 2, _power_model(ctx, 2.0), ctx.target / 10
    )


def _elem_1281_half(ctx: EvalContext) -> types.NumericResult:
    # 1 - (n + 1/2) log(1 + 1/n) = -(atanh(u)/u - 1) with u = 1/(2n + 1)
    return product_from_logs(
        lambda n: -_atanh_excess(1.0 / (2 * n + 1)), 1, _power_model(ctx, 2.0), ctx.target / 10
    )


PI_SQ = cf.pow_("pi", 2)
PI_CUBE_ROOT3 = cf.div(cf.pow_("pi", 3), "sqrt3")
LOG2_SQ = cf.pow_("log2", 2)

ENTRIES = (
    _series(
        "amm-12398",
        "12398",
        "sum_{n>=0} 1 / sinh(2^n)",
        _amm_12398,
        cf.div(2, cf.sub("e", 1)),
        r"S=\frac{2}{e-1}",
        tags=("telescoping",),
    ),
    _series(
        "amm-12470",
        "12470",
        "sum_{n>=1} 2^-n log(tanh(2^n) / tanh(2^(n-1)))",
        _amm_12470,
        cf.sub(cf.log(cf.add(cf.pow_("e", 2), 1)), 2),
        r"=\log (e^2+1)-2\sim 0.1269280110",
        tags=("telescoping",),
    ),
    _series(
        "mm-2167a",
        "2167",
        "sum_{m>=1} (zeta(2m) - 1) / (m + 2)",
        _mm_2167_series,
        cf.add(
            cf.num(7, 4),
            cf.neg(cf.log("pi")),
            cf.neg(cf.div(cf.mul(3, "zeta3"), PI_SQ)),
        ),
        r"\frac{7}{4}-\log\pi-\frac{3}{\pi^2}\zeta(3)",
        tags=("zeta",),
    ),
    _product(
        "mm-2167b",
        "2167",
        "lim e^(n/2) prod_{j=2}^n e^(j^2) (1 - 1/j^2)^(j^4)",
        _mm_2167_product,
        cf.mul("pi", cf.exp(cf.sub(cf.div(cf.mul(3, "zeta3"), PI_SQ), cf.num(5, 4)))),
        r"\sim 1.2970745345",
    ),
    _series(
        "mm-2171a",
        "2171",
        "sum_{n>=0} (cos x - T_n(x)) at x = 1, T_n the Taylor polynomial of degree 2n",
        _mm_2171_cos,
        cf.mul(cf.num(-1, 2), cf.sin(1)),
        r"-\frac{1}{2} x \sin x",
        tags=("taylor",),
    ),
    _series(
        "mm-2171b",
        "2171",
        "sum_{n>=0} (sin x - T_n(x)) at x = 1, T_n the Taylor polynomial of degree 2n + 1",
        _mm_2171_sin,
        cf.div(cf.sub(cf.cos(1), cf.sin(1)), 2),
        r"\frac{x\cos x-\sin x}{2}",
        tags=("taylor",),
    ),
    _series(
        "crux-4825",
        "4825",
        "sum_{n>=1} O_n / (n (n + 1)), O_n = sum_{k<=n} 1/(2k - 1)",
        _crux_4825,
        cf.log(4),
        r"=\log 4",
        tags=("harmonic",),
    ),
    _series(
        "crux-4826",
        "4826",
        "sum_{k>=1} H_k / (k (k + 1) (k + 2))",
        _crux_4826,
        cf.sub(cf.div(PI_SQ, 12), cf.num(1, 2)),
        r"S=\frac{\pi^2}{12}-\frac{1}{2}",
        tags=("harmonic",),
    ),
    _series(
        "crux-4894",
        "4894",
        "sum_{n>=1} H_(n-1) H_(n+1) / (n (n + 1))",
        _crux_4894,
        F(3),
        "=3",
        tol=1e-5,
        tags=("harmonic", "slow"),
    ),
    _series(
        "crux-4903",
        "4903",
        "sum_{n>=1} (sum_{k>=0} (-1)^k / (2n + 2k - 1) - 1/(4n))",
        _crux_4903,
        cf.add(cf.div("log2", 2), cf.div("pi", 8)),
        r"\frac{\log 2}{2}+\frac{\pi}{8}",
        tags=("nested",),
    ),
    _series(
        "crux-4965a",
        "4965",
        "sum_{n>=1} (-1)^(n-1)/n (1/n - 1/(n+2) + 1/(n+4) - ...)",
        _crux_4965_alternating,
        cf.add(cf.neg(cf.div(LOG2_SQ, 8)), cf.mul(cf.num(7, 96), PI_SQ)),
        r"\sim0.659602",
        tags=("nested",),
        notes="the published statement of part a) has the wrong sign",
    ),
    _series(
        "crux-4965b",
        "4965",
        "sum_{n>=1} 1/n (1/n - 1/(n+2) + 1/(n+4) - ...)",
        _crux_4965_plain,
        cf.add(cf.div(LOG2_SQ, 8), cf.mul(cf.num(11, 96), PI_SQ)),
        r"\sim 1.19095",
        tags=("nested",),
    ),
    _series(
        "crux-4988",
        "4988",
        "sum_{n>=1} ((2n - 1) sum_{j>=0} 1/(j + n)^2 - 2)",
        _crux_4988,
        F(-1, 2),
        r"=-\frac{1}{2}",
        tol=1e-9,
        tags=("trigamma",),
    ),
    _series(
        "elem-1434S1",
        "1434",
        "S_1 = sum_{n>=0} 1/(3n + 1)^3",
        _residue_class(1, alternating=False),
        cf.add(cf.mul(cf.num(13, 27), "zeta3"), cf.mul(cf.num(2, 81), PI_CUBE_ROOT3)),
        r"S_1= \frac{13}{27}\;\zeta(3) + \frac{2\pi^3}{81 \sqrt 3}",
    ),
    _series(
        "elem-1434S2",
        "1434",
        "S_2 = sum_{n>=0} 1/(3n + 2)^3",
        _residue_class(2, alternating=False),
        cf.sub(cf.mul(cf.num(13, 27), "zeta3"), cf.mul(cf.num(2, 81), PI_CUBE_ROOT3)),
        r"\sim 0.13675",
    ),
    _series(
        "elem-1434T1",
        "1434",
        "T_1 = sum_{n>=0} (-1)^n/(3n + 1)^3",
        _residue_class(1, alternating=True),
        cf.add(cf.mul(cf.num(13, 36), "zeta3"), cf.mul(cf.num(5, 162), PI_CUBE_ROOT3)),
        r"\sim 0.98659",
    ),
    _series(
        "elem-1434T2",
        "1434",
        "T_2 = sum_{n>=0} (-1)^n/(3n + 2)^3",
        _residue_class(2, alternating=True),
        cf.sub(cf.mul(cf.num(5, 162), PI_CUBE_ROOT3), cf.mul(cf.num(13, 36), "zeta3")),
        r"\sim 0.11843",
    ),
    _series(
        "elem-1437alt",
        "1437",
        "sum_{k>=0} (-1)^k a_k over the Gregory coefficients a_k",
        _elem_1437,
        cf.neg(cf.div(1, "log2")),
        r"=-\frac{1}{\log 2}",
        tol=1e-8,
        tags=("gregory",),
    ),
    entry(
        "amm-12494d",
        "12494",
        Category.DOUBLE_SERIES,
        "sum_{m,n>=1} 1 / (m^2 n + m n^2 + r m n) at r = 0",
        _amm_12494_double,
        cf.mul(2, "zeta3"),
        r"2 \zeta(3)&\text{if $r=0$}",
        tags=("double",),
    ),
    _product(
        "mm-2147",
        "2147",
        "prod_{n>=2} (n^4 + 4) / (n^4 - 1)",
        _mm_2147,
        cf.div(cf.mul(2, cf.sinh("pi")), cf.mul(5, "pi")),
        r"=\frac{2\sinh\pi}{5\pi}",
    ),
    _product(
        "mm-2187",
        "2187",
        "prod_{n>=0} (1 + cosh(2^n s) / cosh(2^n r)) at r = 2, s = 1",
        _mm_2187,
        cf.div(cf.sinh(2), cf.sub(cf.cosh(2), cf.cosh(1))),
        r"\frac{\sinh r}{\cosh r-\cosh s}",
    ),
    _product(
        "amm-11226",
        "11226",
        "prod_{n>=0} ((2n + 1)^4 - (2/pi)^4) / (2n + 1)^4",
        _amm_11226,
        cf.mul(cf.cos(1), cf.cosh(1)),
        r"\cos 1\cosh 1",
        notes="the published final line omits a factor 1/e; the derivation gives cos 1 cosh 1",
    ),
    _product(
        "amm-10588",
        "10588",
        "prod_{n>=1} e^(-1/n) (1 + 1/n + 1/(2n^2))",
        _amm_10588,
        cf.div(
            cf.add(cf.exp(cf.div("pi", 2)), cf.exp(cf.neg(cf.div("pi", 2)))),
            cf.mul("pi", cf.exp("euler_gamma")),
        ),
        r"\over \pi e^\gamma}",
    ),
    _product(
        "amm-10605",
        "10605",
        "prod_{n != m} (n^(2s) - m^(2s)) / (n^(2s) + m^(2s)) at s = m = 1",
        _amm_10605,
        cf.div("pi", cf.sinh("pi")),
        r"(-1)^{m+1}\pi m/\sinh(\pi m)",
    ),
    _product(
        "crux-4836a",
        "4836",
        "prod_{n>=1} 4n(n + 1) / (2n + 1)^2",
        _crux_4836_all,
        cf.div("pi", 4),
        r"\to \frac{\pi}{4}",
    ),
    _product(
        "crux-4836b",
        "4836",
        "prod_{n>=1, 2n+1 prime} 4n(n + 1) / (2n + 1)^2",
        _crux_4836_primes,
        cf.div(8, PI_SQ),
        r"=\frac{8}{\pi^2}",
        tol=1e-9,
        tags=("primes",),
    ),
    _product(
        "crux-4836c",
        "4836",
        "prod_{n>=1, 2n+1 not prime} 4n(n + 1) / (2n + 1)^2",
        _crux_4836_composites,
        cf.div(cf.pow_("pi", 3), 32),
        r"=\frac{\pi^3}{32}",
        tol=1e-9,
        tags=("primes",),
    ),
    _product(
        "elem-1281a",
        "1281",
        "prod_{n>=2} e^2 ((n - 1)/(n + 1))^n",
        _elem_1281_even,
        cf.div(cf.mul(4, "pi"), cf.pow_("e", 3)),
        r"P= \frac{4\pi}{e^3}",
    ),
    _product(
        "elem-1281b",
        "1281",
        "prod_{n>=1} e (n/(n + 1))^(n + 1/2)",
        _elem_1281_half,
        cf.div(cf.sqrt(cf.mul(2, "pi")), "e"),
        r"P^*= \frac{\sqrt {2\pi}}{e}",
    ),
)
