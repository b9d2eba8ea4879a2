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

from idverify.constants import const_value
from idverify.seqsum import TailStrategy, sum_double
from idverify.specfun import zeta

EULER_GAMMA = const_value("euler_gamma")
ROWS = 300


def _row_tail_r0(m: int) -> TailStrategy:
    # integral over n >= x of 1 / (m n (m + n))
    return TailStrategy.integral_tail(lambda x: math.log1p(m / x) / (m * m), ROWS)


def _outer_tail_r0(x: float) -> float:
    # row sums are H_m / m^2
    return (math.log(x) + EULER_GAMMA + 1) / x + 1 / (4 * x * x) - 1 / (36 * x**3)


def test_amm_12494_r0():
    res = sum_double(
        lambda m, n: 1.0 / (m * n * (m + n)),
        TailStrategy.integral_tail(_outer_tail_r0, ROWS),
        1e-9,
        row_tail=_row_tail_r0,
    )
    assert res.value == pytest.approx(2 * zeta(3), abs=1e-9)
    assert abs(res.value - 2 * zeta(3)) <= max(10 * res.err, 1e-12)


def _outer_tail_r1(x: float) -> float:
    # row sums are H_{m+1} / (m (m + 1)) ~ (L + g) / m^2 + (3/2 - L - g) / m^3
    lx = math.log(x)
    g = EULER_GAMMA
    return (lx + 1 + g) / x + (1.5 - g) / (2 * x * x) - (2 * lx + 1) / (4 * x * x)


def test_amm_12494_r1():
    res = sum_double(
        lambda m, n: 1.0 / (m * n * (m + n + 1)),
        TailStrategy.integral_tail(_outer_tail_r1, ROWS),
        1e-6,
        row_tail=lambda m: TailStrategy.integral_tail(
            lambda x: math.log1p((m + 1) / x) / (m * (m + 1)), ROWS
        ),
    )
    assert res.value == pytest.approx(2.0, abs=1e-6)


def test_zero_terms():
    res = sum_double(lambda m, n: 0.0, TailStrategy.none_truncate(20), 1e-12)
    assert res.value == 0.0
    assert res.err == 0.0


def test_transpose_symmetry():
    def term(m, n):
        return 1.0 / ((m + n) ** 2 * m * n)

    tail = TailStrategy.asymptotic_model(alpha=3, n_terms=200, corrections=2)
    a = sum_double(term, tail, 1e-8)
    b = sum_double(lambda m, n: term(n, m), tail, 1e-8)
    assert abs(a.value - b.value) <= 2 * max(a.err, b.err) + 1e-15


def test_row_errors_accumulate():
    tail = TailStrategy.none_truncate(5)
    row_tail = TailStrategy.asymptotic_model(alpha=2, n_terms=50, corrections=1)
    res = sum_double(lambda m, n: 1.0 / (m * n * n), tail, 1e-3, row_tail=row_tail)
    assert res.err > 0
    assert res.value == pytest.approx(sum(1 / m for m in range(1, 6)) * math.pi**2 / 6, abs=1e-6)
