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

import logging
import math
import typing

from idverify import types
from idverify.seqsum.series import sum_series
from idverify.seqsum.tail import TailKind, TailStrategy

logger = logging.getLogger(__name__)

RowTail = typing.Union[TailStrategy, typing.Callable[[int], TailStrategy]]


def sum_double(
    term: typing.Callable[[int, int], float],
    tail: TailStrategy,
    tol: float,
    row_tail: typing.Optional[RowTail] = None,
    start: tuple[int, int] = (1, 1),
) -> types.NumericResult:
    """sum_{m, n} term(m, n) summed row by row.

    Each row m is summed over n with row_tail (a strategy, or a function of m
    giving one; defaults to the outer strategy) and the row sums are then
    summed over m with tail. Errors of every evaluated row add to the error of
    the outer sum.
    """
    row_tail = row_tail if row_tail is not None else tail
    outer_terms = tail.n_terms if tail.kind != TailKind.GEOMETRIC_RATIO else 64
    row_tol = tol / (2 * max(1, outer_terms))
    rows: dict[int, types.NumericResult] = {}

    def row(m: int) -> float:
        if m not in rows:
            strategy = row_tail(m) if callable(row_tail) else row_tail
            rows[m] = sum_series(lambda n: term(m, n), start[1], strategy, row_tol)
        return rows[m].value

    outer = sum_series(row, start[0], tail, tol / 2)
    row_err = math.fsum(r.err for r in rows.values())
    err = outer.err + row_err
    logger.debug(
        "double sum over %d rows: %r (rows err %g, outer err %g)",
        len(rows),
        outer.value,
        row_err,
        outer.err,
    )
    return types.NumericResult(
        outer.value,
        err,
        sum(r.evaluations for r in rows.values()),
        err <= tol,
    )
