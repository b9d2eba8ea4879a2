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
"""Functional equations: every documented solution family, plus a non-solution that must fail."""

import cmath
import functools
import math
import typing

import numpy as np

from idverify import types
from idverify.corpus.entries.common import entry
from idverify.corpus.functional import (
    FunctionalEquation,
    Point,
    check_functional_equation,
    grid2,
    grid3,
    residuals_by_member,
)
from idverify.corpus.identity import ONE, Category, EvalContext, check

FE_TOL = 1e-11
# a non-solution must miss the equation by at least this much somewhere on the grid
CONTROL_MARGIN = 0.1

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(8)


def _gauss(f: typing.Callable[[float], float], a: float, b: float) -> float:
    """Integral of f over [a, b]; exact for polynomials of degree up to 15."""
    half, mid = (b - a) / 2, (a + b) / 2
    return half * math.fsum(w * f(mid + half * t) for t, w in zip(_NODES, _WEIGHTS))


def _fe(
    id: str,
    problem: str,
    fe: FunctionalEquation,
    solutions: typing.Sequence[typing.Any],
    controls: typing.Sequence[typing.Any],
    grid: typing.Sequence[Point],
    statement: str,
    quote: str,
    notes: str = "",
):
    def lhs(ctx: EvalContext) -> types.NumericResult:
        worst = check_functional_equation(fe, solutions, grid)
        missed = min(residuals_by_member(fe, controls, grid))
        return check(worst <= FE_TOL and missed > CONTROL_MARGIN, worst)

    lhs.__name__ = fe.name
    return entry(
        id,
        problem,
        Category.FUNCTIONAL_EQUATION,
        statement,
        lhs,
        ONE,
        quote,
        tol=FE_TOL,
        tags=("functional-equation",),
        notes=notes,
    )


def _linear(m: float, c: float = 0.0) -> typing.Callable[[float], float]:
    return lambda x: m * x + c


def _piecewise(left: float, right: float) -> typing.Callable[[float], float]:
    return lambda x: left * x if x <= 0 else right * x


def _identity(x):
    return x


def _zero(x):
    return 0.0


def _square(x):
    return x * x


# f(f(x)) - (a + b) f(x) + a b x = 0 with a = 1/2, b = 2
_A_12347, _B_12347 = 0.5, 2.0
_FE_12347 = FunctionalEquation(
    "amm_12347",
    lambda f, p: f(f(p[0])) - (_A_12347 + _B_12347) * f(p[0]) + _A_12347 * _B_12347 * p[0],
)


def _residual_12406(member, p: Point) -> float:
    q, f = member
    x = p[0]
    return f(x * x) + 2 * q * f(x) - (x + q) ** 2


def _member_12406(q: float):
    return q, _linear(1.0, q * q / (1 + 2 * q))


_FE_12406 = FunctionalEquation("amm_12406", _residual_12406, lambda p: 0.0 <= p[0] <= 1.0)

# S(n) = f(a_n) + b_n g(b_n) converges with a_n + b_n only if f(x + y) - f(y) = f(x) - f(0)
_FE_12460 = FunctionalEquation(
    "amm_12460", lambda f, p: f(p[0] + p[1]) - f(p[1]) - f(p[0]) + f(0.0)
)


def _residual_12290(f, p: Point) -> float:
    x, y = p
    return abs(f(complex(x, y))) ** 2 - abs(f(complex(x, 0.0))) ** 2 - abs(f(complex(0.0, y))) ** 2


_FE_12290 = FunctionalEquation("amm_12290", _residual_12290)


def _even_extension(g: typing.Callable[[float], float]) -> typing.Callable[[float], float]:
    return lambda t: t * t if t >= 0 else g(t)


_FE_10747 = FunctionalEquation("amm_10747", lambda f, p: f(f(p[0])) - f(p[0]) ** 2)

_FE_10854 = FunctionalEquation(
    "amm_10854", lambda f, p: f(p[0] + 2 * f(p[1])) - f(p[0]) - f(p[1]) - p[1]
)

_FE_4747 = FunctionalEquation(
    "crux_4747",
    lambda f, p: f(p[0] ** 2 * f(p[0]) + f(p[1])) - f(f(p[0] ** 3)) - p[1],
)

_A_4772 = 2.0
_FE_4772 = FunctionalEquation(
    "crux_4772",
    lambda f, p: f(_A_4772 * p[0] + f(p[1])) - p[1] / _A_4772 * f(p[0] * p[1] + 1),
    lambda p: p[0] > 0 and p[1] > 0,
)

_FE_4801 = FunctionalEquation(
    "crux_4801",
    lambda f, p: f(p[0] + 1 / p[1]) - p[1] * f(p[0] * p[1] + p[1]),
    lambda p: p[0] > 0 and p[1] > 0,
)


def _residual_4889(member, p: Point) -> float:
    f, g = member
    x, y = p
    return _gauss(lambda t: f(g(t)), x, y) / (y - x) - f((x + y) / 2)


_FE_4889 = FunctionalEquation("crux_4889", _residual_4889, lambda p: p[0] != p[1])


def _residual_4893(f, p: Point) -> float:
    x = p[0]
    return x * x + _gauss(lambda t: f(x * x * t), 1.0, 1.0 / x) - 1.0


_FE_4893 = FunctionalEquation("crux_4893", _residual_4893, lambda p: 0 < abs(p[0]) <= 1)

_FE_4896 = FunctionalEquation(
    "crux_4896",
    lambda f, p: f(f(p[0]) + p[1] * f(p[2]) - 1)
    + f(p[2] + 1)
    - p[2] * f(p[1])
    - f(p[0] + p[2]),
)

_FE_4914 = FunctionalEquation(
    "crux_4914",
    lambda f, p: f(p[0] ** 2 + p[1] + 1) - p[0] * f(p[0]) - f(p[1]) - 1,
    lambda p: p[0] >= 0 and p[1] >= 0,
)


def _residual_4925(member, p: Point) -> float:
    a, f = member
    x, y = p
    return f(x + y) + x * f(f(y)) - f(f(x)) - f(y) - a * x * y


_FE_4925 = FunctionalEquation("crux_4925", _residual_4925)


def _residual_4953(member, p: Point) -> float:
    a, f = member
    x, y = p
    return (x + y) * f(x + y) - x * f(x) - y * f(y) - a * (y * f(x) + x * f(y))


_FE_4953 = FunctionalEquation("crux_4953", _residual_4953)


def _exponential(lam: float, beta: float) -> typing.Callable[[float], float]:
    return lambda x: lam * math.exp(beta * x)


# f(x) f(a - x) does not depend on x in [0, a]; points are (a, x)
_FE_108C = FunctionalEquation(
    "gaz_108c",
    lambda f, p: f(p[1]) * f(p[0] - p[1]) - f(0.0) * f(p[0]),
    lambda p: 0.0 <= p[1] <= p[0],
)


@functools.lru_cache(maxsize=1)
def _grid_108c() -> typing.List[Point]:
    return [(a, a * s) for a in (0.5, 1.5, 3.0) for s in (0.0, 0.3, 0.5, 0.8, 1.0)]


_REALS = (-2.0, -0.7, 0.0, 1.0, 2.5)
_POSITIVE = (0.25, 0.5, 1.0, 2.0, 3.5)

ENTRIES = (
    _fe(
        "amm-12347",
        "12347",
        _FE_12347,
        [_linear(_A_12347), _linear(_B_12347), _piecewise(0.5, 2.0), _piecewise(2.0, 0.5)],
        [_identity],
        [(x,) for x in (-3.0, -1.0, -0.2, 0.0, 0.4, 1.0, 2.5)],
        "f(f(x)) - (a + b) f(x) + a b x = 0, f(0) = 0, at a = 1/2, b = 2",
        "$F_1(x)=ax$, $F_2(x)=bx$",
        notes="both piecewise solutions are included",
    ),
    _fe(
        "amm-12406",
        "12406",
        _FE_12406,
        [_member_12406(q) for q in (1.0, 2.0, -0.25, 0.0)],
        [(1.0, _identity)],
        [(x,) for x in (0.0, 0.25, 0.5, 0.75, 1.0)],
        "f(x^2) + 2p f(x) = (x + p)^2 on [0, 1]",
        r"x+ \frac{p^2}{1+2p}",
    ),
    _fe(
        "amm-12460",
        "12460",
        _FE_12460,
        [_linear(2.0, -1.0), _linear(-0.5, 3.0), _linear(0.0, 1.0)],
        [_square],
        grid2(_REALS),
        "f(a_n) + b_n g(b_n) converges whenever a_n + b_n does: f affine, g = m",
        "f(x)=mx+c",
    ),
    _fe(
        "amm-12290",
        "12290",
        _FE_12290,
        [
            lambda z: (1 + 2j) * z,
            lambda z: (0.5 - 1j) * cmath.sin(1.3 * z),
            lambda z: 2 * cmath.sinh(0.7 * z),
        ],
        [lambda z: z * z],
        grid2((-1.2, -0.3, 0.5, 1.1)),
        "|f(x + iy)|^2 = |f(x)|^2 + |f(iy)|^2 for entire f",
        r"\sin ^2 x+\sinh^2 y",
    ),
    _fe(
        "amm-10747",
        "10747",
        _FE_10747,
        [
            _square,
            _even_extension(lambda t: t**4),
            _even_extension(lambda t: t * t * (1 - t)),
        ],
        [lambda t: t**3],
        [(t,) for t in (-2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 1.7)],
        "f'(f(t)) = 2 f(t), f(1) = 1, one real root: f o f = f^2",
        r"f\circ f=f^2",
        notes="f = t^2 on t >= 0; any positive g with g(0) = g'(0) = 0 on t < 0",
    ),
    _fe(
        "amm-10854",
        "10854",
        _FE_10854,
        [_identity, _linear(-0.5)],
        [_linear(2.0)],
        grid2(_REALS),
        "f(x + 2f(y)) = f(x) + f(y) + y",
        r"f(x)=x$ or $f(x)=-{x\over 2}",
    ),
    _fe(
        "crux-4747",
        "4747",
        _FE_4747,
        [_identity, _linear(-1.0)],
        [_linear(2.0)],
        grid2((-1.5, -0.5, 0.0, 0.8, 2.0)),
        "f(x^2 f(x) + f(y)) = f(f(x^3)) + y",
        "f(x)=x and f(x)=-x",
    ),
    _fe(
        "crux-4772",
        "4772",
        _FE_4772,
        [lambda x: _A_4772 / x],
        [_square],
        grid2(_POSITIVE),
        "f(ax + f(y)) = (y/a) f(xy + 1) on the positive reals, a = 2",
        "f(x)=a/x",
    ),
    _fe(
        "crux-4801",
        "4801",
        _FE_4801,
        [(lambda x, c=c: c / (1 + x)) for c in (-2.0, 0.0, 1.0, 3.0)],
        [lambda x: 1 / x],
        grid2(_POSITIVE),
        "f(x + 1/y) = y f(xy + y) on the positive reals",
        r"f(x)= \frac{C}{1+x}",
    ),
    _fe(
        "crux-4889",
        "4889",
        _FE_4889,
        [(_linear(a, b), _identity) for a, b in ((1.0, 0.0), (-2.0, 3.0), (0.5, -1.0))],
        [(_square, _identity)],
        [p for p in grid2((-2.0, -0.5, 1.0, 2.5)) if p[0] != p[1]],
        "(1/(y - x)) int_x^y f(g(t)) dt = f((x + y)/2)",
        "f(x)=ax+b",
    ),
    _fe(
        "crux-4893",
        "4893",
        _FE_4893,
        [_linear(2.0)],
        [_linear(3.0)],
        [(x,) for x in (-1.0, -0.6, -0.25, 0.3, 0.7, 1.0)],
        "x^2 + int_1^{1/x} f(x^2 t) dt = 1 on [-1, 1] without 0",
        "f(x)=2x",
    ),
    _fe(
        "crux-4896",
        "4896",
        _FE_4896,
        [_zero, _identity],
        [_linear(2.0)],
        grid3((-1.5, 0.0, 0.5, 2.0)),
        "f(f(x) + y f(z) - 1) + f(z + 1) = z f(y) + f(x + z)",
        r"f\equiv 0$ or $f(x)=x",
    ),
    _fe(
        "crux-4914",
        "4914",
        _FE_4914,
        [_identity],
        [_linear(2.0)],
        grid2((0.0, 0.3, 1.0, 2.2)),
        "f(x^2 + y + 1) = x f(x) + f(y) + 1 on x, y >= 0, f increasing",
        r"the {\it identity} is the only",
    ),
    _fe(
        "crux-4925",
        "4925",
        _FE_4925,
        [(1.0, _identity), (0.0, _zero)],
        [(2.0, _identity)],
        grid2(_REALS),
        "f(x + y) + x f(f(y)) = f(f(x)) + f(y) + a x y",
        r"a\in \{0,1\}",
    ),
    _fe(
        "crux-4953",
        "4953",
        _FE_4953,
        [(3.0, (lambda x, c=c: c * x * x)) for c in (2.0, -1.0, 0.5)],
        [(3.0, _identity)],
        grid2((-2.0, -1.0, 0.5, 1.0, 3.0)),
        "(x + y) f(x + y) - x f(x) - y f(y) = a (y f(x) + x f(y)) at a = 3",
        "f(x)= cx^2",
    ),
    _fe(
        "gaz-108C",
        "108.C",
        _FE_108C,
        [
            _exponential(lam, beta)
            for lam, beta in ((1.0, 0.5), (-2.0, -1.0), (0.0, 0.0), (3.0, 0.0))
        ],
        [_linear(1.0, 1.0)],
        _grid_108c(),
        "f(x) f(a - x) independent of x in [0, a], for every a > 0",
        r"\lambda\, e^{\beta x}",
    ),
)
