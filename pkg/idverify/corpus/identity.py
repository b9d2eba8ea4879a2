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
"""Corpus entries: one solved problem each, pairing a computation with its closed form."""

import dataclasses
import enum
import fractions
import math
import re
import typing

from idverify import config, exceptions, types
from idverify.constants import closed_form
from idverify.quad import QuadOptions

_ID_RE = re.compile(r"^[a-z]+-[0-9A-Za-z]+$")
# quadrature targets sit this far below the entry tolerance
_QUAD_MARGIN = 10.0
_QUAD_TOL_FLOOR = 1e-15


class Category(str, enum.Enum):
    INTEGRAL = "integral"
    SERIES = "series"
    DOUBLE_SERIES = "double_series"
    PRODUCT = "product"
    LIMIT = "limit"
    ROOT_SUM = "root_sum"
    EXACT = "exact"
    FUNCTIONAL_EQUATION = "functional_equation"
    INEQUALITY = "inequality"
    EXTREMUM = "extremum"
    CONSISTENCY = "consistency"


@dataclasses.dataclass(frozen=True)
class Source:
    journal: str
    problem: str

    def __str__(self):
        return f"{self.journal} {self.problem}"


@dataclasses.dataclass(frozen=True)
class EvalContext:
    """Everything an evaluator may depend on besides its own fixed parameters.

    target is the scaled tolerance of the entry being evaluated; kernels derive
    their own stopping tolerances from it.
    """

    profile: config.ProfileConfig
    quad: config.QuadConfig
    seed: int
    alternating_terms: int = 40
    minimize_starts: int = 64
    tol_scale: float = 1.0
    target: float = 1e-10

    def __post_init__(self):
        if not self.tol_scale > 0:
            raise exceptions.ValidationError(f"tol_scale must be positive, not {self.tol_scale}")
        if not self.target > 0:
            raise exceptions.ValidationError(f"target must be positive, not {self.target}")

    @classmethod
    def from_engine(
        cls,
        engine: config.EngineConfig,
        profile: typing.Optional[str] = None,
        seed: typing.Optional[int] = None,
        tol_scale: float = 1.0,
    ) -> "EvalContext":
        return cls(
            profile=engine.profile(profile),
            quad=engine.quad,
            seed=engine.seed if seed is None else seed,
            alternating_terms=engine.alternating_terms,
            minimize_starts=engine.minimize_starts,
            tol_scale=tol_scale,
        )

    def scale_tol(self, tol: float) -> float:
        return tol * self.profile.tol_scale * self.tol_scale

    def for_tol(self, tol: float) -> "EvalContext":
        return dataclasses.replace(self, target=self.scale_tol(tol))

    def budget(self, n: int, floor: int = 8) -> int:
        return max(floor, int(round(n * self.profile.budget_scale)))

    def quad_options(self, tol: typing.Optional[float] = None) -> QuadOptions:
        target = tol if tol is not None else self.target / _QUAD_MARGIN
        target = max(min(target, self.scale_tol(self.quad.target_abs_tol)), _QUAD_TOL_FLOOR)
        # each level doubles the node count
        drop = int(round(-math.log2(self.profile.budget_scale)))
        return QuadOptions(target_abs_tol=target, max_level=max(6, self.quad.max_level - drop))


Evaluator = typing.Callable[[EvalContext], types.NumericResult]
Expected = typing.Union[closed_form.ClosedForm, fractions.Fraction, Evaluator]


@dataclasses.dataclass(frozen=True)
class Identity:
    id: str
    source: Source
    category: Category
    statement: str
    lhs: Evaluator
    rhs: Expected
    tol: float
    quote: str
    tags: typing.Tuple[str, ...] = ()
    notes: str = ""

    def __post_init__(self):
        if not _ID_RE.match(self.id):
            raise exceptions.ValidationError(f"malformed identity id {self.id!r}")
        if not self.tol > 0:
            raise exceptions.ValidationError(f"{self.id}: tol must be positive, not {self.tol}")
        if not self.quote.strip():
            raise exceptions.ValidationError(f"{self.id}: quote must be nonempty")
        if not isinstance(self.category, Category):
            raise exceptions.ValidationError(f"{self.id}: unknown category {self.category}")

    @property
    def is_oracle(self) -> bool:
        return not isinstance(self.rhs, (closed_form.ClosedForm, fractions.Fraction))

    def expected(self, ctx: typing.Optional[EvalContext] = None) -> types.NumericResult:
        if isinstance(self.rhs, closed_form.ClosedForm):
            return types.NumericResult.exact(self.rhs.evaluate())
        if isinstance(self.rhs, fractions.Fraction):
            return types.NumericResult.exact(float(self.rhs))
        if ctx is None:
            raise exceptions.ValidationError(f"{self.id}: a computed rhs needs a context")
        return self.rhs(ctx)

    def rhs_text(self) -> str:
        if isinstance(self.rhs, closed_form.ClosedForm):
            return self.rhs.to_prefix()
        if isinstance(self.rhs, fractions.Fraction):
            return str(self.rhs)
        return f"computed by {getattr(self.rhs, '__name__', 'an independent evaluation')}"


def check(holds: bool, err: float = 0.0) -> types.NumericResult:
    """Result of a yes/no verification: 1.0 when it holds, 0.0 otherwise."""
    return types.NumericResult(1.0 if holds else 0.0, err, 0, True)


ONE = fractions.Fraction(1)
