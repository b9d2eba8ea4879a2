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
import typing

from idverify import serialize


def close_to(x: float, y: float, tol: float) -> bool:
    """|x - y| <= tol, with NaN never close."""
    return math.isfinite(x) and math.isfinite(y) and abs(x - y) <= tol


def poly_eval(coeffs: typing.Sequence[float], x: float) -> float:
    """Horner evaluation, coefficients from the constant term up."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def monomial(degree: int) -> typing.Callable[[float], float]:
    return lambda x: x**degree


def json_round_trip(obj: typing.Any) -> typing.Any:
    return serialize.deserialize_str(serialize.serialize_as_str(obj))
