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
"""Dense univariate polynomials with exact rational coefficients."""

import dataclasses
import fractions
import math
import typing

from idverify import exceptions

Rational = typing.Union[int, fractions.Fraction]


def _strip(coefficients: typing.Iterable[typing.Any]) -> typing.Tuple[fractions.Fraction, ...]:
    coeffs = [fractions.Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclasses.dataclass(frozen=True)
class Poly:
    """p(u) = sum_j coefficients[j] * u**j.

    The zero polynomial has no coefficients and degree -1. Build with of() or
    from_coefficients() to have trailing zeros stripped.
    """

    coefficients: typing.Tuple[fractions.Fraction, ...] = ()

    def __post_init__(self):
        if not isinstance(self.coefficients, tuple):
            raise exceptions.ValidationError("coefficients must be a tuple")
        if self.coefficients and self.coefficients[-1] == 0:
            raise exceptions.ValidationError(
                f"trailing coefficient must be nonzero: {self.coefficients}"
            )

    @classmethod
    def of(cls, *coefficients: typing.Any) -> "Poly":
        return cls(_strip(coefficients))

    @classmethod
    def from_coefficients(cls, coefficients: typing.Iterable[typing.Any]) -> "Poly":
        return cls(_strip(coefficients))

    @classmethod
    def monomial(cls, degree: int, coefficient: typing.Any = 1) -> "Poly":
        if degree < 0:
            raise exceptions.ValidationError(f"degree must be non-negative, got {degree}")
        return cls.of(*([0] * degree), coefficient)

    @classmethod
    def falling_binomial(cls, k: int) -> "Poly":
        """C(s, k) = s (s - 1) ... (s - k + 1) / k! as a polynomial in s."""
        if k < 0:
            raise exceptions.ValidationError(f"k must be non-negative, got {k}")
        acc = cls.of(1)
        for i in range(k):
            acc = acc * cls.of(-i, 1)
        return acc.scale(fractions.Fraction(1, math.factorial(k)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> fractions.Fraction:
        return self.coefficients[-1] if self.coefficients else fractions.Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, j: int) -> fractions.Fraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return fractions.Fraction(0)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coefficients):
            acc = acc * x + (c if isinstance(x, (int, fractions.Fraction)) else float(c))
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly.from_coefficients(
            self.coefficient(j) + other.coefficient(j) for j in range(size)
        )

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [fractions.Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Poly.from_coefficients(out)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise exceptions.ValidationError(f"exponent must be non-negative, got {exponent}")
        acc = Poly.of(1)
        for _ in range(exponent):
            acc = acc * self
        return acc

    def scale(self, factor: Rational) -> "Poly":
        return Poly.from_coefficients(c * factor for c in self.coefficients)

    def derivative(self, order: int = 1) -> "Poly":
        out = self
        for _ in range(order):
            out = Poly.from_coefficients(j * c for j, c in enumerate(out.coefficients) if j > 0)
        return out

    def antiderivative(self) -> "Poly":
        return Poly.from_coefficients(
            [0] + [c / (j + 1) for j, c in enumerate(self.coefficients)]
        )

    def integrate(self, lo: Rational, hi: Rational) -> fractions.Fraction:
        primitive = self.antiderivative()
        return fractions.Fraction(primitive(fractions.Fraction(hi))) - primitive(
            fractions.Fraction(lo)
        )

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x))."""
        acc = Poly()
        for c in reversed(self.coefficients):
            acc = acc * inner + Poly.of(c)
        return acc

    def divmod(self, divisor: "Poly") -> typing.Tuple["Poly", "Poly"]:
        if divisor.is_zero():
            raise exceptions.DomainError("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [fractions.Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / divisor.leading
            quotient[shift] = factor
            for j, c in enumerate(divisor.coefficients):
                remainder[shift + j] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return Poly.from_coefficients(quotient), Poly.from_coefficients(remainder)

    def sturm_sequence(self) -> typing.List["Poly"]:
        if self.is_zero():
            raise exceptions.DomainError("Sturm sequence of the zero polynomial")
        chain = [self, self.derivative()]
        while not chain[-1].is_zero():
            _, remainder = chain[-2].divmod(chain[-1])
            chain.append(-remainder)
        return chain[:-1]

    def real_root_count(self) -> int:
        """Number of distinct real roots, by Sturm's theorem."""
        chain = self.sturm_sequence()
        at_pos = [p.leading for p in chain]
        at_neg = [p.leading * (-1) ** p.degree for p in chain]
        return _sign_changes(at_neg) - _sign_changes(at_pos)


def _sign_changes(values: typing.Iterable[fractions.Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for prev, cur in zip(signs, signs[1:]) if prev != cur)


X = Poly.of(0, 1)
