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

from idverify import exceptions
from idverify.quad import integrate_periods, period_integrals


def test_whole_periods_of_sine_vanish():
    res = integrate_periods(math.sin, 0.0, 2 * math.pi, 10)
    assert res.value == pytest.approx(0.0, abs=1e-12)


def test_half_periods_alternate():
    pieces = period_integrals(lambda x: math.sin(x) / x, 1e-300, math.pi, 6)
    signs = [math.copysign(1, p.value) for p in pieces]
    assert signs == [1, -1, 1, -1, 1, -1]


def test_periods_add_up():
    res = integrate_periods(lambda x: math.cos(x) ** 2, 0.0, math.pi, 4)
    assert res.value == pytest.approx(2 * math.pi, abs=1e-12)


@pytest.mark.parametrize("period,count", [(0.0, 3), (-1.0, 3), (1.0, 0)])
def test_bad_arguments(period, count):
    with pytest.raises(exceptions.ValidationError):
        integrate_periods(math.sin, 0.0, period, count)
