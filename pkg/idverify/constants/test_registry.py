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

import mpmath
import pytest

from idverify import exceptions
from idverify.constants import registry

ORACLES = {
    "pi": lambda: mpmath.pi,
    "e": lambda: mpmath.e,
    "euler_gamma": lambda: mpmath.euler,
    "log2": lambda: mpmath.log(2),
    "catalan": lambda: mpmath.catalan,
    "zeta3": lambda: mpmath.zeta(3),
    "zeta5": lambda: mpmath.zeta(5),
    "sqrt2": lambda: mpmath.sqrt(2),
    "sqrt3": lambda: mpmath.sqrt(3),
}


def test_every_constant_has_an_oracle():
    assert set(registry.names()) == set(ORACLES)


@pytest.mark.parametrize("name", sorted(ORACLES))
def test_matches_oracle(name):
    with mpmath.workdps(30):
        expected = float(ORACLES[name]())
    assert registry.const_value(name) == pytest.approx(expected, rel=1e-15)


def test_pi_machin():
    def arctan_inv(x):
        total, k, term = 0.0, 0, 1.0 / x
        while abs(term) > 1e-20:
            total += term / (2 * k + 1) * (-1) ** k
            k += 1
            term = 1.0 / x ** (2 * k + 1)
        return total

    machin = 4 * (4 * arctan_inv(5) - arctan_inv(239))
    assert registry.const_value("pi") == pytest.approx(machin, rel=1e-15)


def test_euler_gamma_euler_maclaurin():
    n = 1000
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    approx = h - math.log(n) - 1 / (2 * n) + 1 / (12 * n**2) - 1 / (120 * n**4)
    assert registry.const_value("euler_gamma") == pytest.approx(approx, rel=1e-14)


def test_unknown_name():
    with pytest.raises(exceptions.UnknownNameError):
        registry.const_value("tau")


def test_unknown_name_is_key_error():
    with pytest.raises(KeyError):
        registry.const_value("")
