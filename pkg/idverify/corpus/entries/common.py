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
"""Helpers shared by the entry modules."""

import math
import typing

from idverify import types
from idverify.corpus.identity import Category, EvalContext, Expected, Identity, Source
from idverify.quad import Interval, integrate, integrate_periods, period_integrals
from idverify.seqsum import accelerate

JOURNALS = {
    "amm": "AMM",
    "mm": "MM",
    "cmj": "CMJ",
    "elem": "Elem",
    "crux": "Crux",
    "gaz": "Gazette",
}

# sin x - x = sum_k (-1)^k x^(2k+1) / (2k+1)!, k >= 1, good to 1e-17 for |x| <= 1
_SIN_TAYLOR = tuple((-1) ** k / math.factorial(2 * k + 1) for k in range(1, 10))
_SERIES_EPS = 1e-18


def entry(
    id: str,
    problem: str,
    category: Category,
    statement: str,
    lhs: typing.Callable[[EvalContext], types.NumericResult],
    rhs: Expected,
    quote: str,
    tol: float = 1e-10,
    tags: typing.Sequence[str] = (),
    notes: str = "",
    journal: typing.Optional[str] = None,
) -> Identity:
    """Build an Identity; the journal defaults to the one named by the id prefix."""
    journal = journal or JOURNALS[id.split("-", 1)[0]]
    return Identity(
        id=id,
        source=Source(journal, problem),
        category=category,
        statement=statement,
        lhs=lhs,
        rhs=rhs,
        tol=tol,
        quote=quote,
        tags=tuple(tags),
        notes=notes,
    )


def quad(
    f: typing.Callable[..., float], iv: Interval, ctx: EvalContext, complement: bool = False
) -> types.NumericResult:
    return integrate(f, iv, ctx.quad_options(), complement=complement)


def sin_minus_x(x: float) -> float:
    if abs(x) > 1.0:
        return math.sin(x) - x
    x2 = x * x
    acc = 0.0
    for c in reversed(_SIN_TAYLOR):
        acc = acc * x2 + c
    return acc * x2 * x


def sinc_minus_one(x: float) -> float:
    """sin(x)/x - 1 without cancellation near 0."""
    return sin_minus_x(x) / x


def oscillating_half_line(
    f: typing.Callable[[float], float],
    period: float,
    count: int,
    tail: typing.Callable[[float], float],
    tail_err: typing.Callable[[float], float],
    ctx: EvalContext,
) -> types.NumericResult:
    """Integral of f over [0, inf): count whole periods plus an analytic tail.

    The tail starts at X = count * period; tail(X) is the integral of f over
    [X, inf) up to terms bounded by tail_err(X).
    """
    head = integrate_periods(f, 0.0, period, count, ctx.quad_options())
    x_end = count * period
    return types.NumericResult(
        head.value + tail(x_end),
        head.err + tail_err(x_end),
        head.evaluations,
        head.converged,
    )


def alternating_pieces(
    f: typing.Callable[[float], float], a: float, half_period: float, ctx: EvalContext
) -> types.NumericResult:
    """Integral of f over [a, inf) when f changes sign every half_period from a on.

    The piece integrals are handed to the alternating series accelerator.
    """
    pieces = period_integrals(f, a, half_period, ctx.alternating_terms, ctx.quad_options())
    sign = -1.0 if pieces[0].value < 0 else 1.0
    summed = accelerate([abs(p.value) for p in pieces], ctx.target)
    err = summed.err + math.fsum(p.err for p in pieces)
    return types.NumericResult(
        sign * summed.value, err, sum(p.evaluations for p in pieces), summed.converged
    )


def power_series(x: float, coefficient: typing.Callable[[int], float]) -> float:
    """sum_{k >= 1} coefficient(k) x^k for 0 <= x <= 1/4."""
    parts = []
    power = 1.0
    for k in range(1, 200):
        power *= x
        part = coefficient(k) * power
        parts.append(part)
        if abs(part) < _SERIES_EPS * abs(parts[0]):
            break
    return math.fsum(parts)
