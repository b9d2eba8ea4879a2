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
import typing

from idverify import exceptions
from idverify.exact import poly

MAX_POINTS = 8


def lagrange_reciprocal_sides(
    points: typing.Sequence[poly.Rational],
) -> typing.Tuple[fractions.Fraction, fractions.Fraction]:
    """Both sides of sum_k 1/z_k prod_{j != k} 1/(z_k - z_j) = (-1)^(n-1) / prod_j z_j."""
    z = [fractions.Fraction(p) for p in points]
    if not 1 <= len(z) <= MAX_POINTS:
        raise exceptions.ValidationError(f"need 1 to {MAX_POINTS} points, got {len(z)}")
    if any(p == 0 for p in z):
        raise exceptions.ValidationError(f"points must be nonzero: {points}")
    if len(set(z)) != len(z):
        raise exceptions.ValidationError(f"points must be distinct: {points}")

    lhs = fractions.Fraction(0)
    for k, zk in enumerate(z):
        term = 1 / zk
        for j, zj in enumerate(z):
            if j != k:
                term /= zk - zj
        lhs += term

    product = fractions.Fraction(1)
    for p in z:
        product *= p
    return lhs, (-1) ** (len(z) - 1) / product


def lagrange_reciprocal_identity(points: typing.Sequence[poly.Rational]) -> bool:
    lhs, rhs = lagrange_reciprocal_sides(points)
    return lhs == rhs
