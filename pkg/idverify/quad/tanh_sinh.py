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

"""Double-exponential quadrature.

Finite ranges use the tanh-sinh map x = c + h tanh(pi/2 sinh t), half lines the
exp-sinh map x = a + exp(pi/2 sinh t). Both are computed from the distance to the
nearest end so abscissae next to an endpoint keep full relative precision. Each
level halves the step in t and only evaluates the new odd nodes. The error
estimate is the change between consecutive levels plus an estimate of the mass
beyond the outermost nodes that could be evaluated.

An abscissa closer to a nonzero end than half an ulp rounds onto the end and is
skipped. Integrands singular there should be written in complement form,
f(x, xc) with xc the signed distance to the nearest end of the piece (a - x on
the left, b - x on the right), and integrated with complement=True.
"""

import dataclasses
import logging
import math
import sys
import typing

from idverify import exceptions, types
from idverify.quad import interval as iv_mod

logger = logging.getLogger(__name__)

_HALF_PI = math.pi / 2.0
_EPS = sys.float_info.epsilon
_MIN_LEVEL = 3

# t extents per side, indexed by the singular flag of that side
_FINITE_T = {False: 3.2, True: 6.0}
_HALF_LINE_NEAR_T = {False: 3.93, True: 6.7}
_HALF_LINE_FAR_T = {False: 5.68, True: 6.55}

Integrand = typing.Callable[[float], float]
NodeFn = typing.Callable[[float], tuple[float, float, int, float]]
PairIntegrand = typing.Callable[[float, float], typing.Sequence[float]]


@dataclasses.dataclass(frozen=True)
class _Piece:
    node: NodeFn
    t_lo: float
    t_hi: float
    ends: tuple[float, float]
    # sides where failed or non-finite evaluations are dropped
    tolerant: tuple[bool, bool]


def _finite_piece(a: float, b: float, singular: tuple[bool, bool]) -> _Piece:
    width = b - a

    def node(t: float) -> tuple[float, float, int, float]:
        u = _HALF_PI * math.sinh(t)
        e = math.exp(-2.0 * abs(u))
        d = width * e / (1.0 + e)
        w = width * math.pi * math.cosh(t) * e / (1.0 + e) ** 2
        if t < 0:
            return a + d, w, 0, -d
        return b - d, w, 1, d

    return _Piece(node, -_FINITE_T[singular[0]], _FINITE_T[singular[1]], (a, b), singular)


def _half_line_piece(a: float, direction: int, singular: tuple[bool, bool]) -> _Piece:
    """Integral of f over [a, inf) (direction +1) or (-inf, a] (direction -1).

    singular[0] refers to the finite end a, singular[1] to the infinite end.
    """

    def node(t: float) -> tuple[float, float, int, float]:
        u = _HALF_PI * math.sinh(t)
        y = math.exp(u)
        return a + direction * y, y * _HALF_PI * math.cosh(t), 0 if t < 0 else 1, -direction * y

    ends = (a, direction * math.inf)
    return _Piece(
        node,
        -_HALF_LINE_NEAR_T[singular[0]],
        _HALF_LINE_FAR_T[singular[1]],
        ends,
        (singular[0], True),
    )


def _pieces(iv: iv_mod.Interval) -> list[_Piece]:
    left, right = iv.singular
    if iv.kind == iv_mod.IntervalKind.FINITE:
        knots = [iv.a, *iv.split_points, iv.b]
        last = len(knots) - 2
        return [
            _finite_piece(lo, hi, (left if i == 0 else True, right if i == last else True))
            for i, (lo, hi) in enumerate(zip(knots, knots[1:]))
        ]

    if iv.kind == iv_mod.IntervalKind.SEMI_INFINITE:
        knots = [iv.a, *iv.split_points]
        pieces = [
            _finite_piece(lo, hi, (left if i == 0 else True, True))
            for i, (lo, hi) in enumerate(zip(knots, knots[1:]))
        ]
        pieces.append(_half_line_piece(knots[-1], 1, (left if len(knots) == 1 else True, right)))
        return pieces

    knots = list(iv.split_points) or [0.0]
    pieces = [_half_line_piece(knots[0], -1, (False, False))]
    pieces.extend(_finite_piece(lo, hi, (False, False)) for lo, hi in zip(knots, knots[1:]))
    pieces.append(_half_line_piece(knots[-1], 1, (False, False)))
    return pieces


class _Evaluator:
    def __init__(self, f: PairIntegrand, piece: _Piece, ncomp: int, complement: bool):
        self.f = f
        self.piece = piece
        self.ncomp = ncomp
        self.complement = complement
        self.evaluations = 0
        # |w f| of every accepted node, by side (t < 0, t >= 0) and t
        self.accepted: tuple[dict[float, list[float]], dict[float, list[float]]] = ({}, {})

    def __call__(self, t: float) -> typing.Optional[list[float]]:
        x, w, side, xc = self.piece.node(t)
        if w == 0.0 or xc == 0.0:
            return None
        if x == self.piece.ends[side] and not self.complement:
            return None

        self.evaluations += 1
        try:
            values = self.f(x, xc)
            out = [w * float(v) for v in values]
        except (OverflowError, ZeroDivisionError, ValueError) as exc:
            if self.piece.tolerant[side]:
                return None
            raise exceptions.EvaluationError(f"integrand failed at x={x}: {exc}") from exc

        if not all(math.isfinite(v) for v in out):
            if self.piece.tolerant[side]:
                return None
            raise exceptions.EvaluationError(f"integrand not finite at x={x}: {values}")
        self.accepted[side][t] = [abs(v) for v in out]
        return out

    def truncation(self, h: float) -> list[float]:
        """Mass beyond the outermost accepted node of each side, per component.

        The omitted grid terms are continued geometrically from the two outermost
        nodes; terms that do not decay are held constant up to the end of the t range.
        The estimate is doubled to cover the rounding of the outermost abscissae.
        """
        total = [0.0] * self.ncomp
        limits = (self.piece.t_lo, self.piece.t_hi)
        for side, nodes in enumerate(self.accepted):
            if not nodes:
                continue
            outer = min(nodes) if side == 0 else max(nodes)
            last = nodes[outer]
            prev = nodes.get(outer + h if side == 0 else outer - h)
            for c in range(self.ncomp):
                if prev is not None and prev[c] > last[c]:
                    r = last[c] / prev[c]
                    total[c] += h * last[c] * r / (1.0 - r)
                else:
                    total[c] += last[c] * max(abs(limits[side] - outer), h)
        return [2.0 * v for v in total]


def _odd_nodes(t_lo: float, t_hi: float, level: int) -> typing.Iterator[float]:
    h = 2.0**-level
    k_min = math.ceil(t_lo / h)
    k_max = math.floor(t_hi / h)
    if level == 0:
        yield from (float(k) for k in range(k_min, k_max + 1))
        return
    first = k_min if k_min % 2 else k_min + 1
    for k in range(first, k_max + 1, 2):
        yield k * h


def _integrate_piece(g: _Evaluator, tol: float, max_level: int) -> list[types.NumericResult]:
    ncomp = g.ncomp
    raw: list[list[float]] = [[] for _ in range(ncomp)]
    raw_abs: list[list[float]] = [[] for _ in range(ncomp)]
    prev: typing.Optional[list[float]] = None
    errs = [math.inf] * ncomp
    estimate = [0.0] * ncomp

    for level in range(max_level + 1):
        level_sum: list[list[float]] = [[] for _ in range(ncomp)]
        for t in _odd_nodes(g.piece.t_lo, g.piece.t_hi, level):
            vals = g(t)
            if vals is None:
                continue
            for c, v in enumerate(vals):
                level_sum[c].append(v)
        for c in range(ncomp):
            raw[c].append(math.fsum(level_sum[c]))
            raw_abs[c].append(math.fsum(abs(v) for v in level_sum[c]))

        h = 2.0**-level
        estimate = [h * math.fsum(raw[c]) for c in range(ncomp)]
        if prev is not None:
            cut = g.truncation(h)
            errs = [
                max(abs(estimate[c] - prev[c]), 10 * _EPS * h * math.fsum(raw_abs[c])) + cut[c]
                for c in range(ncomp)
            ]
            if level >= _MIN_LEVEL and all(e <= tol for e in errs):
                logger.debug(
                    "converged at level %d with %d evaluations", level, g.evaluations
                )
                return [
                    types.NumericResult(estimate[c], errs[c], g.evaluations, True)
                    for c in range(ncomp)
                ]
        prev = estimate

    logger.debug("no convergence after level %d, err=%s", max_level, errs)
    return [
        types.NumericResult(estimate[c], errs[c], g.evaluations, False) for c in range(ncomp)
    ]


def _integrate_vector(
    f: PairIntegrand,
    iv: iv_mod.Interval,
    opts: iv_mod.QuadOptions,
    ncomp: int,
    complement: bool = False,
) -> list[types.NumericResult]:
    pieces = _pieces(iv)
    tol = opts.target_abs_tol / len(pieces)
    per_piece = [
        _integrate_piece(_Evaluator(f, p, ncomp, complement), tol, opts.max_level)
        for p in pieces
    ]
    results = []
    for c in range(ncomp):
        combined = types.combine(r[c] for r in per_piece)
        # evaluations are shared between components
        results.append(
            dataclasses.replace(
                combined,
                evaluations=sum(r[0].evaluations for r in per_piece),
                converged=combined.converged and combined.err <= opts.target_abs_tol,
            )
        )
    return results


def integrate(
    f: typing.Callable[..., float],
    iv: iv_mod.Interval,
    opts: typing.Optional[iv_mod.QuadOptions] = None,
    complement: bool = False,
) -> types.NumericResult:
    """Integral of f over iv.

    With complement=True f is called as f(x, xc), xc being the signed distance
    from x to the nearest end of its piece.
    """
    opts = opts or iv_mod.QuadOptions()
    if complement:
        return _integrate_vector(lambda x, xc: (f(x, xc),), iv, opts, 1, True)[0]
    return _integrate_vector(lambda x, xc: (f(x),), iv, opts, 1)[0]


def _as_pair(value: typing.Any) -> tuple[float, float]:
    if isinstance(value, complex):
        return value.real, value.imag
    re, im = value
    return re, im


def integrate_complex(
    f: typing.Callable[[float], typing.Any],
    iv: iv_mod.Interval,
    opts: typing.Optional[iv_mod.QuadOptions] = None,
) -> tuple[types.NumericResult, types.NumericResult]:
    """Integrate a complex-valued integrand given as complex or (re, im) pairs."""
    opts = opts or iv_mod.QuadOptions()
    re, im = _integrate_vector(lambda x, xc: _as_pair(f(x)), iv, opts, 2)
    return re, im
