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

import dataclasses
import logging
import math
import typing

from idverify import exceptions, types
from idverify.seqsum import TailStrategy, sum_series
from idverify.solve.bracket import Bracket, root_bracketed

logger = logging.getLogger(__name__)

TAIL_TERMS = 400


@dataclasses.dataclass(frozen=True)
class TailModel:
    """Where the n-th root lies once the roots are no longer computed.

    deviation_bound(n) bounds |r_n - asymptote(n)| for n >= switch_index.
    """

    asymptote: typing.Callable[[int], float]
    deviation_bound: typing.Callable[[int], float]
    switch_index: int = 0

    def __post_init__(self):
        if self.switch_index < 0:
            raise exceptions.ValidationError("switch_index must be non-negative")
        sample_points = [self.switch_index + k for k in (0, 1, 10, 100)]
        bounds = [self.deviation_bound(n) for n in sample_points]
        if any(b < 0 for b in bounds):
            raise exceptions.ValidationError("deviation bound must be non-negative")
        if any(later > earlier for earlier, later in zip(bounds, bounds[1:])):
            raise exceptions.ValidationError("deviation bound must not increase")


def enumerate_roots(
    f: typing.Callable[[float], float],
    bracket_gen: typing.Callable[[int], tuple[float, float]],
    count: int,
    tol: float = 1e-14,
) -> list[float]:
    """The roots in the brackets bracket_gen(0), ..., bracket_gen(count - 1)."""
    roots = []
    for n in range(count):
        a, b = bracket_gen(n)
        try:
            br = Bracket.around(f, a, b)
        except exceptions.ConvergenceError as exc:
            raise exceptions.ConvergenceError(f"bracket {n}: {exc}") from exc
        roots.append(root_bracketed(f, br, tol))
    logger.debug("found %d roots", len(roots))
    return sorted(roots)


def root_power_sum(
    roots: typing.Sequence[float],
    exponent: int,
    tail: TailModel,
    tail_start: int,
    root_err: float = 0.0,
) -> types.NumericResult:
    """sum r^-exponent over the computed roots plus the asymptotic tail from tail_start.

    The error covers the tail's deviation from the asymptote and root_err, an
    absolute error shared by every computed root.
    """
    if exponent < 2:
        raise exceptions.ValidationError(f"exponent must be at least 2, not {exponent}")
    if any(r <= 0 for r in roots) or any(b <= a for a, b in zip(roots, roots[1:])):
        raise exceptions.ValidationError("roots must be positive and strictly ascending")
    if tail_start < tail.switch_index:
        raise exceptions.ValidationError("tail starts before the deviation bound holds")

    head = math.fsum(r**-exponent for r in roots)
    head_err = root_err * exponent * math.fsum(r ** (-exponent - 1) for r in roots)

    strategy = TailStrategy.asymptotic_model(alpha=exponent, n_terms=TAIL_TERMS, corrections=4)
    tail_sum = sum_series(lambda n: tail.asymptote(n) ** -exponent, tail_start, strategy, 1e-15)
    bound_strategy = TailStrategy.asymptotic_model(
        alpha=exponent + 1, n_terms=TAIL_TERMS, corrections=2
    )
    deviation = sum_series(
        lambda n: tail.deviation_bound(n) * tail.asymptote(n) ** (-exponent - 1),
        tail_start,
        bound_strategy,
        1e-15,
    )

    err = head_err + tail_sum.err + exponent * (deviation.value + deviation.err)
    logger.debug("root power sum: head %r, tail %r, err %g", head, tail_sum.value, err)
    return types.NumericResult(head + tail_sum.value, err, len(roots) + tail_sum.evaluations, True)
