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
import math
import typing

from idverify import exceptions


class IntervalKind(str, enum.Enum):
    FINITE = "finite"
    SEMI_INFINITE = "semi_infinite"
    REAL_LINE = "real_line"


@dataclasses.dataclass(frozen=True)
class Interval:
    """An integration range.

    singular flags mark endpoints where the integrand may blow up (or, for the
    infinite end of a semi-infinite range, decay slowly); nodes are pushed much
    closer to flagged endpoints and non-finite values next to them (or at an
    infinite end) are dropped.
    """

    kind: IntervalKind
    a: float = 0.0
    b: float = math.inf
    split_points: tuple[float, ...] = ()
    singular: tuple[bool, bool] = (False, False)

    def __post_init__(self):
        if not isinstance(self.kind, IntervalKind):
            raise exceptions.ValidationError(f"unknown interval kind: {self.kind}")
        splits = tuple(float(p) for p in self.split_points)
        object.__setattr__(self, "split_points", splits)
        if any(not math.isfinite(p) for p in splits):
            raise exceptions.ValidationError("split points must be finite")
        if any(p >= q for p, q in zip(splits, splits[1:])):
            raise exceptions.ValidationError("split points must be strictly ascending")

        if self.kind == IntervalKind.FINITE:
            if not (math.isfinite(self.a) and math.isfinite(self.b)):
                raise exceptions.ValidationError("finite interval needs finite ends")
            if not self.a < self.b:
                raise exceptions.ValidationError(f"need a < b, got [{self.a}, {self.b}]")
            if splits and not (self.a < splits[0] and splits[-1] < self.b):
                raise exceptions.ValidationError("split points must lie inside (a, b)")
        elif self.kind == IntervalKind.SEMI_INFINITE:
            if not math.isfinite(self.a):
                raise exceptions.ValidationError("semi-infinite interval needs finite a")
            if splits and splits[0] <= self.a:
                raise exceptions.ValidationError("split points must exceed a")

    @classmethod
    def finite(
        cls,
        a: float,
        b: float,
        split_points: typing.Sequence[float] = (),
        singular: tuple[bool, bool] = (False, False),
    ) -> "Interval":
        return cls(IntervalKind.FINITE, float(a), float(b), tuple(split_points), singular)

    @classmethod
    def semi_infinite(
        cls,
        a: float,
        split_points: typing.Sequence[float] = (),
        singular: tuple[bool, bool] = (False, False),
    ) -> "Interval":
        return cls(
            IntervalKind.SEMI_INFINITE, float(a), math.inf, tuple(split_points), singular
        )

    @classmethod
    def real_line(cls, split_points: typing.Sequence[float] = (0.0,)) -> "Interval":
        return cls(IntervalKind.REAL_LINE, -math.inf, math.inf, tuple(split_points))


@dataclasses.dataclass(frozen=True)
class QuadOptions:
    target_abs_tol: float = 1e-10
    max_level: int = 12

    def __post_init__(self):
        if not self.target_abs_tol > 0:
            raise exceptions.ValidationError("target_abs_tol must be positive")
        if not 3 <= self.max_level <= 16:
            raise exceptions.ValidationError("max_level must be in [3, 16]")

    def with_tol(self, tol: float) -> "QuadOptions":
        return dataclasses.replace(self, target_abs_tol=tol)
