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

"""Registry of the named constants closed forms may reference.

Values that would otherwise need a convergent computation (zeta3, zeta5, catalan,
euler_gamma) are stored as 17 significant digit literals; the specfun test suite
re-derives each of them independently.
"""

import math
import types

from idverify import exceptions

_CONSTANTS = types.MappingProxyType(
    {
        "pi": math.pi,
        "e": math.e,
        "euler_gamma": 0.57721566490153286,
        "log2": 0.69314718055994531,
        "catalan": 0.91596559417721902,
        "zeta3": 1.2020569031595943,
        "zeta5": 1.0369277551433699,
        "sqrt2": math.sqrt(2.0),
        "sqrt3": math.sqrt(3.0),
    }
)


def names() -> tuple[str, ...]:
    return tuple(_CONSTANTS)


def is_registered(name: str) -> bool:
    return name in _CONSTANTS


def const_value(name: str) -> float:
    try:
        return _CONSTANTS[name]
    except KeyError as exc:
        raise exceptions.UnknownNameError(f"unknown constant: {name}") from exc
