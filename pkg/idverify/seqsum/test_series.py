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

import math

import pytest

from idverify import exceptions, types
from idverify.constants import const_value
from idverify.seqsum import TailStrategy, sum_series
from idverify.specfun import harmonic_float, trigamma, zeta

EULER_GAMMA = const_value("euler_gamma")


def test_amm_12398():
    res = sum_series(lambda n: 1.0 / math.sinh(2.0**n), 0, TailStrategy.geometric_ratio(0.5), 1e-15)
    assert res.converged
    assert res.value == pytest.approx(2 / (math.e - 1), abs=1e-14)


def test_geometric_halves():
    res = sum_series(lambda n: 2.0**-n, 1, TailStrategy.geometric_ratio(0.5), 1e-15)
    assert res.value == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("q", [0.1, 0.5, 0.9])
def test_geometric_property(q):
    res = sum_series(lambda n: q**n, 0, TailStrategy.geometric_ratio(q), 1e-14)
    assert res.converged
    assert abs(res.value - 1 / (1 - q)) <= 1e-13


def test_geometric_rejects_slow_terms():
    with pytest.raises(exceptions.ConvergenceError):
        sum_series(lambda n: 1.0 / n**2, 1, TailStrategy.geometric_ratio(0.5), 1e-12)


def test_crux_4988_asymptotic_model():
    tail = TailStrategy.asymptotic_model(alpha=2, n_terms=2000, corrections=3)
    res = sum_series(lambda n: (2 * n - 1) * trigamma(n) - 2, 1, tail, 1e-9)
    assert res.value == pytest.approx(-0.5, abs=1e-9)
    assert res.err <= 1e-9


def test_asymptotic_model_zeta():
    tail = TailStrategy.asymptotic_model(alpha=3, n_terms=200, corrections=0)
    res = sum_series(lambda n: n**-3.0, 1, tail, 1e-12)
    assert res.value == pytest.approx(zeta(3), abs=1e-13)


def _harmonic_cube_tail(x: float) -> float:
    # integral from x of (L + g)/t^3 + (1/2 - 3 (L + g))/t^4 with L = log t
    lx = math.log(x)
    g = EULER_GAMMA
    first = (2 * lx + 1) / (4 * x * x) + g / (2 * x * x)
    second = 0.5 / (3 * x**3) - 3 * ((3 * lx + 1) / (9 * x**3) + g / (3 * x**3))
    return first + second


def test_crux_4826_integral_tail():
    tail = TailStrategy.integral_tail(_harmonic_cube_tail, 2000)
    res = sum_series(lambda k: harmonic_float(k) / (k * (k + 1) * (k + 2)), 1, tail, 1e-9)
    assert res.value == pytest.approx(math.pi**2 / 12 - 0.5, abs=1e-9)
    assert res.err <= 1e-9


def test_integral_tail_exact_model():
    tail = TailStrategy.integral_tail(lambda x: 1.0 / x, 100)
    res = sum_series(lambda n: 1.0 / (n * n), 1, tail, 1e-8)
    assert res.value == pytest.approx(math.pi**2 / 6, abs=1e-8)
    assert abs(res.value - math.pi**2 / 6) <= 10 * res.err


def test_integral_tail_carries_model_error():
    def tail(x):
        return types.NumericResult(1.0 / x, 1e-6, 1)

    res = sum_series(lambda n: 1.0 / (n * n), 1, TailStrategy.integral_tail(tail, 100), 1e-8)
    assert res.value == pytest.approx(math.pi**2 / 6, abs=1e-8)
    assert res.err >= 1e-6
    assert not res.converged


def test_integral_tail_flags_wrong_model():
    tail = TailStrategy.integral_tail(lambda x: 1.0 / (2 * x * x), 100)
    res = sum_series(lambda n: 1.0 / (n * n), 1, tail, 1e-8)
    assert not res.converged
    assert res.err > 1e-4


def test_alternating_strategy_follows_first_sign():
    res = sum_series(lambda n: (-1) ** n / n, 1, TailStrategy.alternating_accel(), 1e-13)
    assert res.value == pytest.approx(-math.log(2), abs=1e-13)


def test_truncate():
    res = sum_series(lambda n: n, 1, TailStrategy.none_truncate(10), 1.0)
    assert res.value == 55.0
    assert res.err >= 0


def test_non_finite_term():
    with pytest.raises(exceptions.EvaluationError):
        sum_series(lambda n: math.inf, 1, TailStrategy.none_truncate(3), 1e-3)


@pytest.mark.parametrize(
    "build",
    [
        lambda: TailStrategy.geometric_ratio(1.0),
        lambda: TailStrategy.geometric_ratio(-0.1),
        lambda: TailStrategy.asymptotic_model(alpha=1.0, n_terms=100),
        lambda: TailStrategy.asymptotic_model(alpha=2.0, n_terms=3),
        lambda: TailStrategy.integral_tail(None, 10),
        lambda: TailStrategy.none_truncate(-1),
        lambda: TailStrategy.alternating_accel(2),
    ],
)
def test_bad_strategies(build):
    with pytest.raises(exceptions.ValidationError):
        build()


def test_tol_must_be_positive():
    with pytest.raises(exceptions.ValidationError):
        sum_series(lambda n: 1.0, 1, TailStrategy.none_truncate(1), 0.0)
