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
from idverify.exact import lagrange_reciprocal_identity, lagrange_reciprocal_sides

F = fractions.Fraction


def test_single_point():
    assert lagrange_reciprocal_sides([5]) == (F(1, 5), F(1, 5))


def test_two_points():
    assert lagrange_reciprocal_sides([1, 2]) == (F(-1, 2), F(-1, 2))


@pytest.mark.parametrize(
    "points",
    [[1, 2, 3], [F(1, 2), -3, F(7, 5), 11], [-1, -2, -3, -4, -5, -6, -7, -8], [F(2, 9), F(9, 2)]],
)
def test_identity_holds(points):
    assert lagrange_reciprocal_identity(points)


@pytest.mark.parametrize("points", [[], [1, 0], [2, 2], list(range(1, 10))])
def test_invalid_points(points):
    with pytest.raises(exceptions.ValidationError):
        lagrange_reciprocal_identity(points)
