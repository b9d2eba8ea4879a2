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
from idverify.solve import Bracket, root_bracketed

SQRT3 = math.sqrt(3)


def g_12479(x):
    return 2 * math.cos(SQRT3 * x) + math.exp(-3 * x)


def test_amm_12479_first_root():
    root = root_bracketed(g_12479, Bracket.around(g_12479, 0.8, 1.0))
    assert root == pytest.approx(0.924906, abs=1e-6)


def test_sqrt2():
    def f(x):
        return x * x - 2

    assert root_bracketed(f, Bracket.around(f, 1, 2)) == pytest.approx(math.sqrt(2), abs=1e-14)


def test_crux_4905():
    def f(t):
        return t + t * t + t**3 + 1 / t + 1 / t**2 + 1 / t**3 - 70

    root = root_bracketed(f, Bracket.around(f, 0.2, 0.3))
    assert root == pytest.approx(2 - SQRT3, abs=1e-13)
    assert math.degrees(math.atan(root)) == pytest.approx(15.0, abs=1e-10)


def test_root_at_endpoint():
    def f(x):
        return x - 1

    assert root_bracketed(f, Bracket.around(f, 1.0, 2.0)) == 1.0


@pytest.mark.parametrize("tol", [1e-6, 1e-9, 1e-12])
def test_tighter_tolerance_moves_little(tol):
    coarse = root_bracketed(math.cos, Bracket.around(math.cos, 1, 2), tol)
    fine = root_bracketed(math.cos, Bracket.around(math.cos, 1, 2), tol / 10)
    assert abs(coarse - fine) <= tol
    assert abs(math.cos(coarse)) <= tol


def test_no_sign_change():
    with pytest.raises(exceptions.ConvergenceError):
        Bracket.around(lambda x: x * x + 1, -1, 1)


def test_bad_interval():
    with pytest.raises(exceptions.ValidationError):
        Bracket(2.0, 1.0, -1.0, 1.0)
