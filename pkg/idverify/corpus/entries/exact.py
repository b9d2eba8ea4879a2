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
"""Finite identities and integer searches, checked in exact arithmetic."""

import fractions
import itertools
import logging
import typing

from idverify import types
from idverify.corpus.entries.common import entry
from idverify.corpus.identity import ONE, Category, EvalContext, check
from idverify.exact import (
    CheckReport,
    Poly,
    SearchKind,
    bell_cross_check,
    binomial_identity_suite,
    compose_derivative_check,
    euler_finite_difference_suite,
    gl_sum,
    lagrange_reciprocal_identity,
    mo_coefficients,
    pair_families,
    search_diophantine,
)

logger = logging.getLogger(__name__)

F = fractions.Fraction


def _exact(id, problem, journal, statement, lhs, quote, tags=(), notes=""):
    return entry(
        id,
        problem,
        Category.EXACT,
        statement,
        lhs,
        ONE,
        quote,
        tags=("exact", *tags),
        notes=notes,
        journal=journal,
    )


def _suite(name: str, grid: typing.Iterable[typing.Dict[str, typing.Any]]):
    """Evaluator checking binomial_identity_suite(name, **params) on every point of grid."""
    points = list(grid)

    def lhs(ctx: EvalContext) -> types.NumericResult:
        return check(all(binomial_identity_suite(name, **params) for params in points))

    lhs.__name__ = name
    return lhs


def _search(kind: SearchKind, bound: int, expected, scaled: bool = False):
    def lhs(ctx: EvalContext) -> types.NumericResult:
        b = ctx.budget(bound, floor=min(bound, 10**4)) if scaled else bound
        return check(search_diophantine(kind, b) == list(expected))

    lhs.__name__ = kind.value
    return lhs


def _euler_finite_difference(ctx: EvalContext) -> types.NumericResult:
    report: CheckReport = euler_finite_difference_suite(ctx.seed, count=ctx.budget(50))
    for failure in report.failures:
        logger.warning("finite difference case failed: %s", failure)
    return check(report.ok)


def _lagrange_reciprocal(ctx: EvalContext) -> types.NumericResult:
    holds = True
    for n in range(1, 7):
        holds &= lagrange_reciprocal_identity(range(1, n + 1))
        holds &= lagrange_reciprocal_identity([F(2 * j + 1, j + 2) * (-1) ** j for j in range(n)])
    return check(holds)


def _composition_derivatives(ctx: EvalContext) -> types.NumericResult:
    f = Poly.of(0, 1, 0, 0, 1)
    g = Poly.of(1, 1, 0, 1)
    holds = all(compose_derivative_check(f, g, n, F(1, 2)) for n in range(1, 7))
    holds &= all(bell_cross_check(n) for n in range(1, 7))
    third = sorted((k.parts, c) for k, c in mo_coefficients(3))
    return check(holds and third == [((1, 1, 1), 1), ((1, 2), 3), ((3,), 1)])


def _pairs_4855(ctx: EvalContext) -> types.NumericResult:
    bound = 30
    return check(search_diophantine(SearchKind.PAIR, bound) == pair_families(bound))


def _gl_sums(ctx: EvalContext) -> types.NumericResult:
    return check(
        gl_sum(2, 2) == ((0, 0), (0, 0)) and gl_sum(2, 1) == ((1,),) and gl_sum(3, 1) == ((0,),)
    )


ENTRIES = (
    _exact(
        "exact-12415",
        "12415",
        "AMM",
        "sum_j sum_k C(2n+2, 2k+1) C(n+1, 2k-j) = 2^(3n+1), n <= 8",
        _suite("dbl_binom_12415", ({"n": n} for n in range(9))),
        "S_n=2^{3n+1}",
    ),
    _exact(
        "exact-12535",
        "12535",
        "AMM",
        "sum_k (-1)^k C(n, k) p(k) = 0 below degree n and (-1)^n n! lead(p) at degree n",
        _euler_finite_difference,
        "Euler's finite difference theorem",
        tags=("random",),
    ),
    _exact(
        "exact-4951",
        "4951",
        "Crux",
        "two alternating reciprocal binomial sums equal (1 + (-1)^(n+1))/(n + 1), n <= 30",
        _suite("alt_recip_4951", ({"n": n} for n in range(1, 31))),
        r"\frac{1+(-1)^{n+1}}{n+1}",
    ),
    _exact(
        "exact-Q1140a",
        "Quicky 1140",
        "MM",
        "sum_k (-1)^k C(m+k, k) C(m+n+1, n-k) = 1, n, m <= 12",
        _suite(
            "quicky_1140a",
            ({"n": n, "m": m} for n, m in itertools.product(range(13), repeat=2)),
        ),
        "B(n,m)=1",
    ),
    _exact(
        "exact-Q1140b",
        "Quicky 1140",
        "MM",
        "the same sum for real (a, b) = (1.5, 2.5), summed numerically",
        _suite("quicky_1140b", [{"a": 1.5, "b": 2.5}]),
        "S(a,b)=1",
        tags=("numeric",),
    ),
    _exact(
        "exact-1449",
        "1449",
        "Elem",
        "sum_k (-1)^(k-1) C(2n+1, k) C(k-1, 2) 2^(k-3) = n^2, n <= 15",
        _suite("elem_1449", ({"n": n} for n in range(1, 16))),
        "A=n^2",
    ),
    _exact(
        "exact-4900",
        "4900",
        "Crux",
        "H_m + H_n + H_p + H_q <= 3 + H_{mnpq}, 1 <= m <= n <= p <= q <= 25",
        _suite("harmonic_ineq_4900", [{"bound": 25}]),
        "3 + H_{mnpq}",
        tags=("inequality",),
    ),
    _exact(
        "exact-10697",
        "10697",
        "AMM",
        "sum_k 1/z_k prod_{j != k} 1/(z_k - z_j) = (-1)^(n-1)/prod z_j, n <= 6",
        _lagrange_reciprocal,
        r"{(-1)^{n-1}\over \prod_{j=1}^nz_j}",
    ),
    _exact(
        "exact-11070",
        "11070",
        "AMM",
        "(f o g)^(n) over ordered multi-indices agrees with direct expansion, n <= 6",
        _composition_derivatives,
        r"C_k^n=\frac{1}{~\prod_i[A_k(i)!]~}{n\choose k}",
    ),
    _exact(
        "exact-4854",
        "4854",
        "Crux",
        "sum_j (sin(j r pi/(n+1)) + sin(j s pi/(n+1)))^2 = n+1 or 2(n+1), n <= 12",
        _suite(
            "trig_sum_4854",
            (
                {"n": n, "r": r, "s": s}
                for n in range(1, 13)
                for r in range(1, n + 1)
                for s in range(1, n + 1)
            ),
        ),
        r"n+1&\text{if $r\not=s$}",
        tags=("numeric",),
    ),
    _exact(
        "exact-1296",
        "1296",
        "CMJ",
        "partial fractions of n / T_n(cos t), n <= 12",
        _suite("cheb_partfrac_1296", ({"n": n} for n in range(1, 13))),
        r"T_n(\cos t)=\cos(nt)",
        tags=("numeric",),
    ),
    _exact(
        "exact-12436",
        "12436",
        "AMM",
        "prod_k (x + sin^2(k pi/2n)) = 2^(2-2n) (x + 1) U_{n-1}(2x + 1), n <= 12",
        _suite("cheb_product_12436", ({"n": n} for n in range(1, 13))),
        r"2^{-2n+2}(x+1) U_{n-1}(2x+1)",
        tags=("numeric",),
    ),
    _exact(
        "exact-2184",
        "2184",
        "MM",
        "the discriminant of the cubic in both forms, and its sign against the root count",
        _suite("discriminant_2184", [{"seed": 2184, "count": 50}]),
        r"D=D(a,b)=-4\left[",
    ),
    _exact(
        "exact-1437",
        "1437",
        "Elem",
        "the Gregory coefficients satisfy 1/(3k^2) <= a_k <= 1/k, k <= 30",
        _suite("gregory_bounds", ({"k": k} for k in range(1, 31))),
        r"0\leq a_k\leq \frac{1}{k}",
    ),
    _exact(
        "exact-2117",
        "2117",
        "MM",
        "(m + 1)^n = m! + 1 for n, m <= 20",
        _search(SearchKind.FACTORIAL_POWER, 20, [(1, 1), (1, 2), (2, 4)]),
        "only the three solutions",
        tags=("search",),
    ),
    _exact(
        "exact-4803",
        "4803",
        "Crux",
        "p^(2a) + q^(2b) = (2c + 1)^2 for primes p <= q, a, b <= 12",
        _search(SearchKind.POW23_SQUARE, 12, [(2, 1, 2)]),
        r"2^{2\cdot 2} + 3^{2\cdot 1} =(2 \cdot 2+1)^2",
        tags=("search",),
    ),
    _exact(
        "exact-108E",
        "108.E",
        "Gazette",
        "n, n+2, n+6, n+8, n+14 all prime, n <= 10^6",
        _search(SearchKind.QUINTUPLET, 10**6, [5], scaled=True),
        "only $n=5$ yields",
        tags=("search", "primes"),
    ),
    _exact(
        "exact-4855",
        "4855",
        "Crux",
        "a^b - b^a = a - b for a, b <= 30 gives only the trivial families and (2, 3), (3, 2)",
        _pairs_4855,
        "(1, v), (u,1), (t,t),  (2,3), (3,2)",
        tags=("search",),
    ),
    _exact(
        "exact-4811",
        "4811",
        "Crux",
        "n^3 + 1 and n + 2 both squares, n <= 10^12",
        _search(SearchKind.CUBE_SQUARE, 10**12, [2], scaled=True),
        "n=2 is the only solution",
        tags=("search",),
    ),
    _exact(
        "exact-1447",
        "1447",
        "Elem",
        "(20 + 24 sqrt2)^n = (24 + 20 sqrt2)^m only for n = m = 0, n, m <= 80",
        _search(SearchKind.NORM, 80, [(0, 0)]),
        "nur die $1$ als gemeinsame Zahl",
        tags=("search",),
    ),
    _exact(
        "exact-4850",
        "4850",
        "Crux",
        "sum of the invertible matrices over F_q: zero at (q, n) = (2, 2), (3, 1); 1 at (2, 1)",
        _gl_sums,
        "is the $n\\times n$ zero matrix",
    ),
)
