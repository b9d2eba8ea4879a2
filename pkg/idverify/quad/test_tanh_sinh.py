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

import cmath
import fractions
import math
import random

import mpmath
import pytest

import testing_utils
from idverify import exceptions
from idverify.quad import Interval, QuadOptions, integrate, integrate_complex
from idverify.specfun import zeta

TIGHT = QuadOptions(target_abs_tol=1e-13, max_level=14)


def test_mm_2223():
    res = integrate(
        lambda x: (1 - x) * math.log(x) ** 2 / (1 + x**3),
        Interval.finite(0, 1, singular=(True, False)),
    )
    assert res.converged
    assert res.value == pytest.approx(13 / 9 * zeta(3), abs=1e-10)
    assert res.value == pytest.approx(1.7363044156, abs=1e-9)


def test_mm_2202():
    res = integrate(
        lambda t: math.cos(math.cos(t)) * math.cosh(math.sin(t)), Interval.finite(0, 2 * math.pi)
    )
    assert res.converged
    assert res.value == pytest.approx(2 * math.pi, abs=1e-10)


def test_amm_12407_semi_infinite():
    res = integrate(lambda x: x * x / ((1 + x * x) * (1 + x**6)), Interval.semi_infinite(0))
    assert res.converged
    assert res.value == pytest.approx(math.pi / 12, abs=1e-10)


def test_amm_12372_interior_singularity():
    res = integrate(
        lambda x: math.log(abs(x**3 - (1 - x) ** 3)) / x,
        Interval.finite(0, 1, split_points=[0.5]),
    )
    assert res.value == pytest.approx(-11 * math.pi**2 / 36, abs=1e-9)


def test_zero_integrand_is_exact():
    res = integrate(lambda x: 0.0, Interval.finite(0, 1))
    assert res.value == 0.0
    assert res.err == 0.0
    assert res.converged


def test_evaluations_are_counted():
    res = integrate(math.exp, Interval.finite(0, 1))
    assert res.evaluations > 0
    assert res.value == pytest.approx(math.e - 1, abs=1e-12)


@pytest.mark.parametrize("degree", range(11))
def test_polynomial_exactness(degree):
    rng = random.Random(degree)
    coeffs = [fractions.Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)]
    exact = sum(c / (k + 1) for k, c in enumerate(coeffs))
    floats = [float(c) for c in coeffs]

    res = integrate(lambda x: testing_utils.poly_eval(floats, x), Interval.finite(0, 1))
    assert testing_utils.close_to(res.value, float(exact), 1e-13)


@pytest.mark.parametrize("degree", [0, 3, 8])
def test_monomials_with_split_point(degree):
    res = integrate(testing_utils.monomial(degree), Interval.finite(-1, 1, split_points=[0.5]))
    expected = 0.0 if degree % 2 else 2.0 / (degree + 1)
    assert testing_utils.close_to(res.value, expected, 1e-13)


def test_log_endpoint_singularity():
    res = integrate(math.log, Interval.finite(0, 1, singular=(True, False)), TIGHT)
    assert res.value == pytest.approx(-1.0, abs=1e-11)


def test_algebraic_endpoint_singularity():
    res = integrate(lambda x: x**-0.5, Interval.finite(0, 1, singular=(True, False)), TIGHT)
    assert res.value == pytest.approx(2.0, abs=1e-11)


def test_right_endpoint_singularity():
    res = integrate(lambda x: math.log1p(-x), Interval.finite(0, 1, singular=(False, True)), TIGHT)
    assert res.value == pytest.approx(-1.0, abs=1e-11)


@pytest.mark.parametrize("seed", range(5))
def test_additivity(seed):
    c = random.Random(seed).uniform(0.05, 1.95)

    def f(x):
        return math.sin(3 * x) * math.exp(-x) + x**2

    whole = integrate(f, Interval.finite(0, 2))
    left = integrate(f, Interval.finite(0, c))
    right = integrate(f, Interval.finite(c, 2))
    assert abs(whole.value - (left.value + right.value)) <= whole.err + left.err + right.err + 1e-14


def test_log_over_quadratics_semi_infinite():
    res = integrate(
        lambda x: math.log(x) / ((x * x + 1) * (x * x + 9)),
        Interval.semi_infinite(0, singular=(True, False)),
    )
    assert res.value == pytest.approx(-math.pi * math.log(3) / 48, abs=1e-10)


def test_gaussian_real_line():
    res = integrate(lambda t: math.exp(-t * t), Interval.real_line())
    assert res.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)


def test_gaussian_with_split_points():
    res = integrate(lambda t: math.exp(-t * t), Interval.real_line([-1.0, 2.0]))
    assert res.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)


def test_error_honesty_against_oracle():
    iv = Interval.finite(0, 1, singular=(True, True))
    res = integrate(lambda x: math.log(x) * math.log1p(-x), iv)
    oracle = float(mpmath.quad(lambda x: mpmath.log(x) * mpmath.log(1 - x), [0, 1]))
    assert abs(res.value - oracle) <= max(10 * res.err, 1e-12)


def test_non_convergence_is_reported():
    res = integrate(
        lambda x: math.sin(1 / x),
        Interval.finite(0, 1, singular=(True, False)),
        QuadOptions(max_level=4),
    )
    assert not res.converged
    assert math.isfinite(res.value)


def test_nan_raises_evaluation_error():
    with pytest.raises(exceptions.EvaluationError):
        integrate(lambda x: math.nan, Interval.finite(0, 1))


def test_error_away_from_flagged_end_raises():
    with pytest.raises(exceptions.EvaluationError):
        integrate(lambda x: math.log(x - 0.5), Interval.finite(0, 1))


def test_mass_lost_at_nonzero_end_is_reported():
    # abscissae within half an ulp of 1 round onto the end and are skipped
    res = integrate(
        lambda x: 1.0 / math.sqrt(1.0 - x),
        Interval.finite(0, 1, singular=(False, True)),
        TIGHT,
    )
    assert abs(res.value - 2.0) <= res.err
    assert res.err > 1e-9
    assert not res.converged


def _inverse_sqrt_distance(upper):
    def f(x, xc):
        return 1.0 / math.sqrt(xc if xc > 0 else upper - x)

    return f


@pytest.mark.parametrize("lower, upper", [(0.0, 1.0), (1.0, math.sqrt(2))])
def test_complement_form_at_nonzero_end(lower, upper):
    res = integrate(
        _inverse_sqrt_distance(upper),
        Interval.finite(lower, upper, singular=(False, True)),
        TIGHT,
        complement=True,
    )
    expected = 2.0 * math.sqrt(upper - lower)
    assert res.converged
    assert abs(res.value - expected) <= max(res.err, 1e-13)
    assert res.err <= 1e-12


def test_complement_sign_marks_the_side():
    seen = []

    def f(x, xc):
        seen.append((x, xc))
        return 1.0

    res = integrate(f, Interval.finite(2, 5), complement=True)
    assert res.value == pytest.approx(3.0, abs=1e-13)
    for x, xc in seen:
        if xc < 0:
            assert x - 2 == pytest.approx(-xc, abs=1e-15)
        else:
            assert 5 - x == pytest.approx(xc, abs=1e-15)


def test_regular_integrand_error_stays_small():
    res = integrate(math.cos, Interval.finite(0, 1), TIGHT)
    assert res.err <= 1e-13
    assert abs(res.value - math.sin(1)) <= 1e-14


def test_amm_12433_complex():
    def f(t):
        return cmath.tanh(math.pi * t) / (0.5 + 1j * t) ** 3

    re, im = integrate_complex(f, Interval.real_line())
    # zeta(x) = (i/2) * integral
    assert -im.value / 2 == pytest.approx(zeta(3), abs=1e-6)
    assert re.value == pytest.approx(0.0, abs=1e-6)


def test_complex_zero():
    re, im = integrate_complex(lambda t: (0.0, 0.0), Interval.real_line())
    assert (re.value, im.value) == (0.0, 0.0)


def test_complex_gaussian_pair():
    re, im = integrate_complex(lambda t: (math.exp(-t * t), 0.0), Interval.real_line())
    assert re.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)
    assert im.value == 0.0
    assert re.evaluations == im.evaluations


@pytest.mark.parametrize(
    "kwargs",
    [
        {"target_abs_tol": 0.0},
        {"target_abs_tol": -1e-3},
        {"max_level": 2},
        {"max_level": 17},
    ],
)
def test_bad_options(kwargs):
    with pytest.raises(exceptions.ValidationError):
        QuadOptions(**kwargs)


@pytest.mark.parametrize(
    "build",
    [
        lambda: Interval.finite(1, 1),
        lambda: Interval.finite(2, 1),
        lambda: Interval.finite(0, 1, split_points=[1.5]),
        lambda: Interval.finite(0, 1, split_points=[0.6, 0.4]),
        lambda: Interval.semi_infinite(0, split_points=[-1]),
        lambda: Interval.finite(0, math.inf),
    ],
)
def test_bad_intervals(build):
    with pytest.raises(exceptions.ValidationError):
        build()
