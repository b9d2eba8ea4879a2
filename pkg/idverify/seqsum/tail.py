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
import enum
import typing

from idverify import exceptions, types

DEFAULT_MAX_TERMS = 100_000
TailIntegral = typing.Callable[[float], typing.Union[float, types.NumericResult]]


class TailKind(str, enum.Enum):
    GEOMETRIC_RATIO = "geometric_ratio"
    INTEGRAL_TAIL = "integral_tail"
    ALTERNATING_ACCEL = "alternating_accel"
    ASYMPTOTIC_MODEL = "asymptotic_model"
    NONE_TRUNCATE = "none_truncate"


@dataclasses.dataclass(frozen=True)
class TailStrategy:
    """How a series closes the part it does not sum term by term.

    n_terms is the number of terms summed directly, except for geometric_ratio
    where it caps the number of terms tried before giving up.

    geometric_ratio: terms shrink at least by q per step; the remainder after a
        term a is at most |a| q / (1 - q).
    integral_tail: tail_integral(x) is the integral from x to infinity of a model
        of the terms; the tail is closed with a midpoint rule plus a
        derivative correction. A NumericResult from tail_integral adds its err
        to the bound.
    alternating_accel: terms alternate in sign with decreasing magnitude; the
        series is accelerated over n_terms terms.
    asymptotic_model: terms behave like sum_j c_j n^-(alpha + j) for j up to
        corrections; the coefficients are fitted from sampled terms.
    none_truncate: plain partial sum, no tail.
    """

    kind: TailKind
    n_terms: int = 0
    q: float = 0.0
    tail_integral: typing.Optional[TailIntegral] = None
    alpha: float = 0.0
    corrections: int = 0

    def __post_init__(self):
        if not isinstance(self.kind, TailKind):
            raise exceptions.ValidationError(f"unknown tail kind: {self.kind}")
        if self.n_terms < 0:
            raise exceptions.ValidationError(f"n_terms must be non-negative, not {self.n_terms}")

        if self.kind == TailKind.GEOMETRIC_RATIO:
            if not 0 <= self.q < 1:
                raise exceptions.ValidationError(f"geometric ratio needs 0 <= q < 1, not {self.q}")
            if self.n_terms < 1:
                raise exceptions.ValidationError("geometric ratio needs a term cap")
        elif self.kind == TailKind.INTEGRAL_TAIL:
            if self.tail_integral is None or not callable(self.tail_integral):
                raise exceptions.ValidationError("integral tail needs a tail_integral callable")
            if self.n_terms < 2:
                raise exceptions.ValidationError("integral tail needs at least 2 direct terms")
        elif self.kind == TailKind.ASYMPTOTIC_MODEL:
            if not self.alpha > 1:
                raise exceptions.ValidationError(
                    f"asymptotic model needs alpha > 1, not {self.alpha}"
                )
            if self.corrections < 0:
                raise exceptions.ValidationError("corrections must be non-negative")
            if self.n_terms < 4 * (self.corrections + 1):
                raise exceptions.ValidationError("too few direct terms for the asymptotic fit")
        elif self.kind == TailKind.ALTERNATING_ACCEL:
            if self.n_terms < 5:
                raise exceptions.ValidationError("alternating acceleration needs at least 5 terms")

    @classmethod
    def geometric_ratio(cls, q: float, max_terms: int = DEFAULT_MAX_TERMS) -> "TailStrategy":
        return cls(TailKind.GEOMETRIC_RATIO, n_terms=max_terms, q=q)

    @classmethod
    def integral_tail(
        cls, tail_integral: TailIntegral, n_terms: int
    ) -> "TailStrategy":
        return cls(TailKind.INTEGRAL_TAIL, n_terms=n_terms, tail_integral=tail_integral)

    @classmethod
    def alternating_accel(cls, n_terms: int = 40) -> "TailStrategy":
        return cls(TailKind.ALTERNATING_ACCEL, n_terms=n_terms)

    @classmethod
    def asymptotic_model(cls, alpha: float, n_terms: int, corrections: int = 2) -> "TailStrategy":
        return cls(TailKind.ASYMPTOTIC_MODEL, n_terms=n_terms, alpha=alpha, corrections=corrections)

    @classmethod
    def none_truncate(cls, n_terms: int) -> "TailStrategy":
        return cls(TailKind.NONE_TRUNCATE, n_terms=n_terms)
