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

import testing_utils
from idverify.corpus import identity
from idverify.corpus.entries import common
from idverify.quad import Interval


def test_entry_journal_from_prefix():
    entry = common.entry(
        "gaz-108Ha",
        "108.H",
        identity.Category.INTEGRAL,
        "statement",
        lambda ctx: None,
        identity.ONE,
        "q",
    )
    assert entry.source == identity.Source("Gazette", "108.H")
    assert str(entry.source) == "Gazette 108.H"


def test_entry_explicit_journal():
    entry = common.entry(
        "exact-2117",
        "2117",
        identity.Category.EXACT,
        "statement",
        lambda ctx: None,
        identity.ONE,
        "q",
        journal="MM",
    )
    assert entry.source.journal == "MM"


@pytest.mark.parametrize("x", [0.0, 1e-8, 0.3, -0.7, 1.0, 2.5, -4.0])
def test_sin_minus_x(x):
    assert testing_utils.close_to(common.sin_minus_x(x), math.sin(x) - x, 1e-16 + 1e-15 * abs(x))


def test_sin_minus_x_keeps_relative_precision():
    x = 1e-4
    assert common.sin_minus_x(x) == pytest.approx(-(x**3) / 6 + x**5 / 120, rel=1e-15)
    assert common.sinc_minus_one(x) == pytest.approx(-(x**2) / 6 + x**4 / 120, rel=1e-15)


def test_power_series_log():
    # -log(1 - x) = sum x^k / k
    x = 0.2
    assert common.power_series(x, lambda k: 1.0 / k) == pytest.approx(-math.log1p(-x), abs=1e-16)


def test_power_series_at_zero():
    assert common.power_series(0.0, lambda k: 1.0) == 0.0


def test_quad(ctx):
    res = common.quad(math.exp, Interval.finite(0.0, 1.0), ctx)
    assert res.value == pytest.approx(math.e - 1, abs=1e-13)


def test_alternating_pieces_dirichlet(ctx):
    local = ctx.for_tol(1e-10)
    res = common.alternating_pieces(lambda x: math.sin(x) / x if x else 1.0, 0.0, math.pi, local)
    assert res.value == pytest.approx(math.pi / 2, abs=1e-9)


def test_oscillating_half_line_with_analytic_tail(ctx):
    # int_0^inf e^-x sin x = 1/2; the tail past X is e^-X (sin X + cos X) / 2
    local = ctx.for_tol(1e-10)
    res = common.oscillating_half_line(
        lambda x: math.exp(-x) * math.sin(x),
        2 * math.pi,
        4,
        lambda x: math.exp(-x) * (math.sin(x) + math.cos(x)) / 2,
        lambda x: 0.0,
        local,
    )
    assert res.value == pytest.approx(0.5, abs=1e-12)
