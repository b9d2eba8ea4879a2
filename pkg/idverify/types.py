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
import math
import typing

from idverify import exceptions

Real = float


@dataclasses.dataclass(frozen=True)
class NumericResult:
    value: float
    err: float
    evaluations: int = 0
    converged: bool = True

    def __post_init__(self):
        if not isinstance(self.err, (int, float)) or math.isnan(self.err):
            raise exceptions.ValidationError(f"err must be a number, not {self.err}")
        if self.err < 0:
            raise exceptions.ValidationError(f"err must be non-negative, not {self.err}")
        if self.evaluations < 0:
            raise exceptions.ValidationError("evaluations must be non-negative")

    @classmethod
    def exact(cls, value: float) -> "NumericResult":
        return cls(value=float(value), err=0.0, evaluations=0, converged=True)

    def scaled(self, factor: float) -> "NumericResult":
        return dataclasses.replace(
            self, value=self.value * factor, err=self.err * abs(factor)
        )

    def shifted(self, offset: float) -> "NumericResult":
        return dataclasses.replace(self, value=self.value + offset)


def combine(
    results: typing.Iterable[NumericResult], weights: typing.Optional[list] = None
) -> NumericResult:
    """Weighted sum of independent results; errors add in absolute value."""
    results = list(results)
    if weights is None:
        weights = [1.0] * len(results)
    if len(weights) != len(results):
        raise exceptions.ValidationError("weights and results differ in length")

    return NumericResult(
        value=math.fsum(w * r.value for w, r in zip(weights, results)),
        err=math.fsum(abs(w) * r.err for w, r in zip(weights, results)),
        evaluations=sum(r.evaluations for r in results),
        converged=all(r.converged for r in results),
    )


def check_finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise exceptions.EvaluationError(f"{what} is not finite: {value}")
    return value
