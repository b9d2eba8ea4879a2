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

import pytest

from idverify import exceptions
from idverify.exact import binomial_identity_suite, discriminant_root_count
from idverify.exact import identities

F = fractions.Fraction


def test_double_binomial_base_case():
    assert binomial_identity_suite("dbl_binom_12415", n=0)


@pytest.mark.parametrize("n", [1, 2, 8])
def test_double_binomial_rows_with_negative_lower_index(n):
    # odd j starts at k = (j - 1) / 2, where C(n + 1, -1) = 0
    assert binomial_identity_suite("dbl_binom_12415", n=n)


@pytest.mark.parametrize("n", range(0, 11))
def test_double_binomial(n):
    assert identities.double_binomial_sum(n)


@pytest.mark.parametrize("n", range(1, 31))
def test_alternating_reciprocal_sums(n):
    assert binomial_identity_suite("alt_recip_4951", n=n)


def test_alternating_binomial_product_example():
    assert binomial_identity_suite("quicky_1140a", n=3, m=2)


@pytest.mark.parametrize("n", range(0, 13))
@pytest.mark.parametrize("m", [0, 1, 5, 12])
def test_alternating_binomial_product(n, m):
    assert identities.alternating_binomial_product(n, m)


def test_gamma_binomial_series():
    assert binomial_identity_suite("quicky_1140b", a=1.5, b=2.5)


def test_gamma_binomial_series_integer_case():
    assert identities.gamma_binomial_series(1.0, 2.0)


@pytest.mark.parametrize("n", range(1, 16))
def test_binomial_power_sum(n):
    assert binomial_identity_suite("elem_1449", n=n)


def test_harmonic_inequality_small_bound():
    assert identities.harmonic_inequality(4)


@pytest.mark.slow
def test_harmonic_inequality():
    assert binomial_identity_suite("harmonic_ineq_4900", bound=25)


def test_sine_square_sums():
    for n in range(1, 13):
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                assert binomial_identity_suite("trig_sum_4854", n=n, r=r, s=s), (n, r, s)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 30])
def test_chebyshev_partial_fractions(n):
    assert binomial_identity_suite("cheb_partfrac_1296", n=n)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 30])
def test_chebyshev_product(n):
    assert binomial_identity_suite("cheb_product_12436", n=n)


def test_discriminant_suite():
    assert binomial_identity_suite("discriminant_2184", seed=2184, count=50)


@pytest.mark.parametrize(
    "a,b,roots,sign",
    [(F(1, 2), 0, 3, 1), (-1, 0, 1, -1), (3, 1, 1, -1)],
)
def test_discriminant_root_count(a, b, roots, sign):
    count, disc = discriminant_root_count(a, b)
    assert count == roots
    assert (disc > 0) - (disc < 0) == sign


@pytest.mark.parametrize("a,b", [(1, 1), (F(-3, 4), F(5, 2)), (F(1, 8), F(-1, 3))])
def test_discriminant_forms_agree(a, b):
    assert identities.cubic_discriminant(a, b) == identities.completed_square_discriminant(a, b)


def test_gregory_bounds_member():
    assert binomial_identity_suite("gregory_bounds", k=5)


def test_unknown_member():
    with pytest.raises(exceptions.UnknownNameError):
        binomial_identity_suite("nope", n=1)


@pytest.mark.parametrize(
    "name,params",
    [
        ("dbl_binom_12415", {"n": 31}),
        ("elem_1449", {"n": 0}),
        ("trig_sum_4854", {"n": 3, "r": 4, "s": 1}),
        ("quicky_1140a", {"n": 1}),
        ("discriminant_2184", {"count": 0}),
    ],
)
def test_out_of_bound_params(name, params):
    with pytest.raises(exceptions.ValidationError):
        binomial_identity_suite(name, **params)
