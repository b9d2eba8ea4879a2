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

import fractions
import math

import mpmath
import pytest

from idverify import exceptions
from idverify.constants import registry
from idverify.specfun import (
    beta,
    binomial_real,
    chebyshev,
    dilog,
    eta,
    harmonic,
    harmonic_float,
    log_gamma,
    power_tail,
    trigamma,
    zeta,
)
from idverify.specfun import bernoulli

PI2_6 = math.pi**2 / 6


def test_zeta_six():
    assert zeta(6) == pytest.approx(math.pi**6 / 945, rel=1e-13)


@pytest.mark.parametrize("s", [1.01, 1.5, 2, 3, 4.5, 6, 11])
def test_zeta_against_oracle(s):
    assert zeta(s) == pytest.approx(float(mpmath.zeta(s)), rel=1e-13)


def test_zeta_two_direct_sum_oracle():
    n = 10**6
    direct = math.fsum(1.0 / (k * k) for k in range(n, 0, -1))
    assert zeta(2) == pytest.approx(direct + 1.0 / (n + 0.5), rel=1e-12)


def test_zeta3_matches_registered_constant():
    assert zeta(3) == pytest.approx(registry.const_value("zeta3"), rel=1e-15)
    assert zeta(5) == pytest.approx(registry.const_value("zeta5"), rel=1e-15)


@pytest.mark.parametrize("s", [1, 0.5, -2])
def test_zeta_domain(s):
    with pytest.raises(exceptions.DomainError):
        zeta(s)


@pytest.mark.parametrize("s,n", [(2, 0), (2, 5), (3.5, 19), (2, 20), (6, 1000)])
def test_power_tail(s, n):
    expected = float(mpmath.zeta(s, n + 1))
    assert power_tail(s, n) == pytest.approx(expected, rel=1e-13)


def test_eta_three():
    assert eta(3) == pytest.approx(0.75 * zeta(3), rel=1e-13)


def test_eta_two():
    assert eta(2) == pytest.approx(math.pi**2 / 12, rel=1e-13)


def test_eta_one():
    assert eta(1) == math.log(2)


@pytest.mark.parametrize("s", [1.5, 2, 3, 4, 6])
def test_eta_zeta_relation(s):
    assert eta(s) == pytest.approx((1 - 2 ** (1 - s)) * zeta(s), rel=1e-12)


def test_eta_domain():
    with pytest.raises(exceptions.DomainError):
        eta(0.9)


def test_dilog_values():
    assert dilog(1) == PI2_6
    assert dilog(0) == 0
    assert dilog(0.5) == pytest.approx(0.5822405264650125, abs=1e-12)


@pytest.mark.parametrize("x", [-50.0, -3.0, -1.0, -0.3, 0.2, 0.5, 0.7, 0.99])
def test_dilog_against_oracle(x):
    assert dilog(x) == pytest.approx(float(mpmath.polylog(2, x)), abs=1e-12)


@pytest.mark.parametrize("x", [i / 20 for i in range(1, 20)])
def test_dilog_reflection(x):
    lhs = dilog(x) + dilog(1 - x)
    assert lhs == pytest.approx(PI2_6 - math.log(x) * math.log(1 - x), abs=1e-11)


@pytest.mark.parametrize("t", [2, 5, 10])
def test_dilog_inversion(t):
    lhs = dilog(-t) + dilog(-1 / t)
    assert lhs == pytest.approx(-PI2_6 - 0.5 * math.log(t) ** 2, abs=1e-11)


def test_dilog_domain():
    with pytest.raises(exceptions.DomainError):
        dilog(1.5)


def test_trigamma_values():
    assert trigamma(1) == pytest.approx(PI2_6, rel=1e-12)
    assert trigamma(2) == pytest.approx(PI2_6 - 1, rel=1e-12)


def test_trigamma_recurrence():
    x = 3.7
    assert trigamma(x) - trigamma(x + 1) == pytest.approx(1 / x**2, rel=1e-11)


@pytest.mark.parametrize("n", range(1, 51))
def test_trigamma_integers(n):
    direct = PI2_6 - math.fsum(1.0 / (j + 1) ** 2 for j in range(n - 1))
    assert trigamma(n) == pytest.approx(direct, abs=1e-12)


@pytest.mark.parametrize("x", [0.01, 0.25, 0.75, 7.99, 8.0, 123.4])
def test_trigamma_against_oracle(x):
    assert trigamma(x) == pytest.approx(float(mpmath.psi(1, x)), rel=1e-12)


def test_catalan_from_trigamma():
    catalan = (trigamma(0.25) - trigamma(0.75)) / 16
    assert catalan == pytest.approx(registry.const_value("catalan"), rel=1e-12)


def test_trigamma_domain():
    with pytest.raises(exceptions.DomainError):
        trigamma(0)


def test_harmonic_values():
    assert harmonic(0, 1) == 0
    assert harmonic(1, 1) == 1
    assert harmonic(4, 1) == fractions.Fraction(25, 12)
    assert harmonic(2, 2) == fractions.Fraction(5, 4)


@pytest.mark.parametrize("n", [1, 2, 7, 30])
def test_harmonic_is_exact(n):
    assert n * (harmonic(n, 1) - harmonic(n - 1, 1)) == 1


@pytest.mark.parametrize("n", [0, 5, 19, 20, 21, 100, 300])
@pytest.mark.parametrize("order", [1, 2])
def test_harmonic_float(n, order):
    assert harmonic_float(n, order) == pytest.approx(float(harmonic(n, order)), rel=1e-15)


@pytest.mark.parametrize("bad", [(-1, 1), (3, 3)])
def test_harmonic_validation(bad):
    with pytest.raises(exceptions.ValidationError):
        harmonic(*bad)


def test_chebyshev():
    assert chebyshev("U", 1, 3) == 6
    assert chebyshev("U", 5, 1) == 6
    assert chebyshev("T", 3, math.cos(0.4)) == pytest.approx(math.cos(1.2), abs=1e-15)
    assert chebyshev("T", 0, 0.3) == 1


def test_chebyshev_validation():
    with pytest.raises(exceptions.ValidationError):
        chebyshev("V", 2, 0.1)
    with pytest.raises(exceptions.ValidationError):
        chebyshev("T", -1, 0.1)


def test_beta_values():
    assert beta(2, 2) == pytest.approx(1 / 6, rel=1e-12)
    assert beta(1, 1) == pytest.approx(1, rel=1e-12)


def test_beta_symmetric():
    assert beta(1.5, 2.5) == beta(2.5, 1.5)


def test_log_gamma_half():
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-12)


@pytest.mark.parametrize("x", [0.001, 0.3, 0.5, 1.5, 3.25, 10, 171.5, 1e4])
def test_log_gamma_against_stdlib(x):
    assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("args", [(0, 1), (1, -1)])
def test_beta_domain(args):
    with pytest.raises(exceptions.DomainError):
        beta(*args)


def test_bernoulli():
    assert bernoulli.bernoulli(1) == fractions.Fraction(-1, 2)
    assert bernoulli.bernoulli(12) == fractions.Fraction(-691, 2730)
    assert bernoulli.bernoulli(13) == 0


@pytest.mark.parametrize("x,k", [(5, 2), (0.5, 3), (-1.5, 4), (100.5, 80), (7, 0)])
def test_binomial_real(x, k):
    assert binomial_real(x, k) == pytest.approx(float(mpmath.binomial(x, k)), rel=1e-12)


def test_binomial_real_integer_matches_comb():
    assert binomial_real(10, 3) == pytest.approx(120.0, rel=1e-15)
    with pytest.raises(exceptions.DomainError):
        binomial_real(3.0, -1)
