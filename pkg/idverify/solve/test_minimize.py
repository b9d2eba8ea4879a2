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
from idverify.solve import minimize_multistart

ELEM_1442 = (2 + 2 ** (2 / 3)) ** 1.5


def sphere_objective(p):
    theta, phi = p
    x = math.sin(theta) * math.cos(phi)
    y = math.sin(theta) * math.sin(phi)
    z = math.cos(theta)
    return 1 / x + 1 / y + 2 / z


def crux_4817(p):
    a, b = p
    c = 1 / (a * b)

    def part(u, v, w):
        return (u**7 + u**3 + v * w) / (u + v * w + 1)

    return part(a, b, c) + part(b, c, a) + part(c, a, b)


def test_elem_1442():
    eps = 1e-3
    res = minimize_multistart(sphere_objective, [eps, eps], [math.pi / 2 - eps] * 2)
    assert res.value == pytest.approx(ELEM_1442, abs=1e-8)
    assert res.value == pytest.approx(6.794693902, abs=1e-8)


def test_crux_4817():
    res = minimize_multistart(crux_4817, [0.2, 0.2], [3.0, 3.0])
    assert res.value == pytest.approx(3.0, abs=1e-9)
    assert res.point == pytest.approx((1.0, 1.0), abs=1e-4)


def test_one_dimensional():
    res = minimize_multistart(lambda p: (p[0] - 1) ** 2, [0.0], [2.0], starts=8)
    assert res.value == pytest.approx(0.0, abs=1e-12)
    assert res.point[0] == pytest.approx(1.0, abs=1e-6)


def test_deterministic():
    first = minimize_multistart(crux_4817, [0.2, 0.2], [3.0, 3.0], starts=16, seed=7)
    second = minimize_multistart(crux_4817, [0.2, 0.2], [3.0, 3.0], starts=16, seed=7)
    assert first == second
    assert first.seed == 7
    assert first.starts == 16


def test_equality_constraint_by_penalty():
    res = minimize_multistart(
        lambda p: p[0] + p[1],
        [-2.0, -2.0],
        [2.0, 2.0],
        starts=16,
        constraint=lambda p: p[0] ** 2 + p[1] ** 2 - 1,
    )
    assert res.value == pytest.approx(-math.sqrt(2), abs=1e-3)


def test_no_feasible_start():
    with pytest.raises(exceptions.ConvergenceError):
        minimize_multistart(lambda p: math.nan, [0.0], [1.0], starts=4)


def test_bad_box():
    with pytest.raises(exceptions.ValidationError):
        minimize_multistart(lambda p: 0.0, [1.0], [0.0])
