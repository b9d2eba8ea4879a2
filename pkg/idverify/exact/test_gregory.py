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

import pytest

from idverify import exceptions
from idverify.exact import gregory_bounds, gregory_coefficient
from idverify.seqsum import sum_alternating

F = fractions.Fraction


@pytest.mark.parametrize(
    "k,value",
    [(0, F(-1)), (1, F(1, 2)), (2, F(1, 12)), (3, F(1, 24)), (4, F(19, 720)), (5, F(3, 160))],
)
def test_coefficients(k, value):
    assert gregory_coefficient(k) == value


@pytest.mark.parametrize("k", range(1, 41))
def test_bounds(k):
    assert gregory_bounds(k)


def test_bounds_guard():
    with pytest.raises(exceptions.ValidationError):
        gregory_bounds(0)


def test_alternating_sum():
    # a_0 = -1 carried separately; the rest alternates with decreasing magnitudes
    rest = sum_alternating(lambda k: float(gregory_coefficient(k)), 1, 1e-10)
    assert -1 - rest.value == pytest.approx(-1 / math.log(2), abs=1e-9)
