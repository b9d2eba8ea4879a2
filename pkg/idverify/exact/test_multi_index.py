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
from idverify.exact import MultiIndex, Poly, bell_cross_check, compose_derivative_check
from idverify.exact import mo_coefficients
from idverify.exact.multi_index import bell_by_enumeration, multi_indices
from idverify.exact.poly import X

F = fractions.Fraction


def _as_pairs(n):
    return [(k.parts, c) for k, c in mo_coefficients(n)]


def test_first_order_is_chain_rule():
    assert _as_pairs(1) == [((1,), 1)]


def test_second_order():
    assert _as_pairs(2) == [((2,), 1), ((1, 1), 1)]


def test_third_order():
    assert _as_pairs(3) == [((3,), 1), ((1, 2), 3), ((1, 1, 1), 1)]


def test_fourth_order_coefficients():
    assert dict(_as_pairs(4)) == {(4,): 1, (1, 3): 4, (2, 2): 3, (1, 1, 2): 6, (1, 1, 1, 1): 1}


@pytest.mark.parametrize("n,count", [(1, 1), (4, 5), (6, 11), (8, 22)])
def test_one_index_per_partition(n, count):
    assert len(multi_indices(n)) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_coefficients_sum_to_bell_numbers(n):
    assert bell_cross_check(n)


def test_bell_by_enumeration():
    assert [bell_by_enumeration(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_multi_index_properties():
    k = MultiIndex((1, 1, 3))
    assert k.size == 5
    assert k.length == 3
    assert k.multiplicities() == {1: 2, 3: 1}
    assert k.coefficient() == 10


@pytest.mark.parametrize("parts", [(), (2, 1), (0, 1)])
def test_invalid_multi_index(parts):
    with pytest.raises(exceptions.ValidationError):
        MultiIndex(parts)


def test_compose_square_with_cubic():
    assert compose_derivative_check(Poly.monomial(2), Poly.of(0, 1, 0, 1), 4, 1)


def test_compose_cube_with_shifted_square():
    assert compose_derivative_check(Poly.monomial(3), Poly.of(2, 0, 1), 5, F(1, 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_compose_general_polynomials(n):
    f = Poly.of(3, -1, F(2, 3), 0, 5, 1)
    g = Poly.of(F(-1, 2), 2, 0, 7, F(1, 4))
    assert compose_derivative_check(f, g, n, F(-3, 5))


def test_first_order_any_pair():
    assert compose_derivative_check(X**3 + X, Poly.of(1, 1), 1, 2)


@pytest.mark.parametrize("n", [0, 9])
def test_compose_order_guard(n):
    with pytest.raises(exceptions.ValidationError):
        compose_derivative_check(X, X, n, 0)
