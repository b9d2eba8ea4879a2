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
from idverify.exact import Poly
from idverify.exact.poly import X

F = fractions.Fraction


def test_trailing_zeros_stripped():
    assert Poly.of(1, 2, 0, 0).coefficients == (1, 2)
    assert Poly.of(0, 0).is_zero()
    assert Poly.of(0).degree == -1


def test_raw_trailing_zero_rejected():
    with pytest.raises(exceptions.ValidationError):
        Poly((F(1), F(0)))


def test_arithmetic():
    assert (X + Poly.of(1)) ** 2 == Poly.of(1, 2, 1)
    assert (X - X).is_zero()
    assert Poly.of(1, 1) * Poly.of(-1, 1) == Poly.of(-1, 0, 1)
    assert Poly.of(2, 4).scale(F(1, 2)) == Poly.of(1, 2)


def test_evaluation():
    p = Poly.of(1, F(1, 2), 3)
    assert p(2) == 14
    assert p(F(1, 3)) == F(1) + F(1, 6) + F(1, 3)
    assert p(0.5) == pytest.approx(2.0)


def test_calculus():
    cube = Poly.monomial(3)
    assert cube.derivative() == Poly.of(0, 0, 3)
    assert cube.derivative(4).is_zero()
    assert cube.antiderivative() == Poly.monomial(4, F(1, 4))
    assert X.integrate(0, 1) == F(1, 2)


def test_compose():
    assert Poly.monomial(2).compose(X + Poly.of(1)) == Poly.of(1, 2, 1)
    assert Poly.of(5).compose(X) == Poly.of(5)


def test_falling_binomial():
    assert Poly.falling_binomial(3)(5) == 10
    assert Poly.falling_binomial(0) == Poly.of(1)
    assert Poly.falling_binomial(2)(F(1, 2)) == F(-1, 8)


def test_divmod():
    quotient, remainder = Poly.of(-1, 0, 0, 1).divmod(Poly.of(-1, 1))
    assert quotient == Poly.of(1, 1, 1)
    assert remainder.is_zero()

    quotient, remainder = Poly.of(1, 0, 1).divmod(Poly.of(0, 2))
    assert quotient == Poly.of(0, F(1, 2))
    assert remainder == Poly.of(1)

    quotient, remainder = Poly.of(3).divmod(Poly.of(0, 1))
    assert quotient.is_zero()
    assert remainder == Poly.of(3)


def test_divide_by_zero():
    with pytest.raises(exceptions.DomainError):
        X.divmod(Poly())


@pytest.mark.parametrize(
    "p,count",
    [
        (Poly.of(-1, 1) * Poly.of(-2, 1) * Poly.of(-3, 1), 3),
        (Poly.of(1, 0, 1), 0),
        (Poly.of(1, -2, 1), 1),
        (Poly.of(-2, 0, 0, 1), 1),
        (Poly.of(F(1, 100), 0, -1) * Poly.of(-7, 1), 3),
        (Poly.of(4), 0),
    ],
)
def test_real_root_count(p, count):
    assert p.real_root_count() == count


def test_sturm_of_zero():
    with pytest.raises(exceptions.DomainError):
        Poly().real_root_count()
