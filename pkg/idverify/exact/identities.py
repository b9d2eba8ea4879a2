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
"""Finite identities checked exactly, or in binary64 for the trigonometric ones."""

import fractions
import functools
import logging
import math
import typing

import numpy as np

from idverify import exceptions
from idverify.exact import gregory, poly
from idverify.seqsum import TailStrategy, sum_series
from idverify.specfun import beta, chebyshev, harmonic_float

logger = logging.getLogger(__name__)

MAX_EXACT_N = 30
FLOAT_TOL = 1e-9
# above this product the harmonic inequality is checked in binary64 with a certified margin
EXACT_HARMONIC_PRODUCT = 4096
HARMONIC_MARGIN = 1e-9

F = fractions.Fraction


def _require(ok: bool, message: str):
    if not ok:
        raise exceptions.ValidationError(message)


def _close(lhs: float, rhs: float, tol: float = FLOAT_TOL) -> bool:
    return abs(lhs - rhs) <= tol * max(1.0, abs(rhs))


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if k >= 0 else 0


def double_binomial_sum(n: int) -> bool:
    """sum_{j=0..2n} sum_{k=floor(j/2)..j} C(2n+2, 2k+1) C(n+1, 2k-j) = 2^(3n+1).

    The k = floor(j/2) term of an odd j has lower index -1 and contributes 0.
    """
    _require(0 <= n <= MAX_EXACT_N, f"n must be in [0, {MAX_EXACT_N}], got {n}")
    total = sum(
        math.comb(2 * n + 2, 2 * k + 1) * _comb(n + 1, 2 * k - j)
        for j in range(2 * n + 1)
        for k in range(j // 2, j + 1)
    )
    return total == 2 ** (3 * n + 1)


def alternating_reciprocal_sums(n: int) -> bool:
    """sum_k (-1)^(k-1) C(n, k-1) / k and sum_k (-1)^(k-1) / (k C(n, k)), k = 1..n.

    Both equal (1 + (-1)^(n+1)) / (n + 1).
    """
    _require(1 <= n <= MAX_EXACT_N, f"n must be in [1, {MAX_EXACT_N}], got {n}")
    want = F(1 + (-1) ** (n + 1), n + 1)
    first = sum((F((-1) ** (k - 1) * math.comb(n, k - 1), k) for k in range(1, n + 1)), F(0))
    second = sum((F((-1) ** (k - 1), k * math.comb(n, k)) for k in range(1, n + 1)), F(0))
    return first == want and second == want


def alternating_binomial_product(n: int, m: int) -> bool:
    """sum_{k=0..n} (-1)^k C(m+k, k) C(m+n+1, n-k) = 1."""
    _require(0 <= n <= MAX_EXACT_N and 0 <= m <= MAX_EXACT_N, f"n, m out of range: {n}, {m}")
    total = sum(
        (-1) ** k * math.comb(m + k, k) * math.comb(m + n + 1, n - k) for k in range(n + 1)
    )
    return total == 1


@functools.lru_cache(maxsize=4)
def _gamma_binomial_terms(a: float, b: float, count: int) -> typing.Tuple[float, ...]:
    terms = [1.0 / (a * beta(a, b))]
    for k in range(count - 1):
        terms.append(terms[-1] * -(a + k) * (b - k - 1) / ((k + 1) * (a + k + 1)))
    return tuple(terms)


def gamma_binomial_series(a: float = 1.5, b: float = 2.5, tol: float = FLOAT_TOL) -> bool:
    """sum_{k>=0} (-1)^k C(a+k-1, k) C(a+b-1, b-k-1) = 1 for real a, b > 0.

    Past k = b - 1 the terms keep one sign and decay like k^-(b+1), so the
    series is closed with an asymptotic tail of that order.
    """
    _require(a > 0 and b > 0, f"need a > 0 and b > 0, got {a}, {b}")
    strategy = TailStrategy.asymptotic_model(alpha=b + 1, n_terms=2000, corrections=3)
    terms = _gamma_binomial_terms(a, b, strategy.n_terms)
    res = sum_series(lambda k: terms[k], 0, strategy, tol)
    logger.debug("gamma binomial series at (%g, %g): %r (err %g)", a, b, res.value, res.err)
    return res.converged and _close(res.value, 1.0, tol)


def binomial_power_sum(n: int) -> bool:
    """sum_{k=3..2n+1} (-1)^(k-1) C(2n+1, k) C(k-1, 2) 2^(k-3) = n^2."""
    _require(1 <= n <= MAX_EXACT_N, f"n must be in [1, {MAX_EXACT_N}], got {n}")
    total = sum(
        (-1) ** (k - 1) * math.comb(2 * n + 1, k) * math.comb(k - 1, 2) * 2 ** (k - 3)
        for k in range(3, 2 * n + 2)
    )
    return total == n * n


def _exact_harmonics(limit: int) -> typing.List[fractions.Fraction]:
    acc = [F(0)]
    for j in range(1, limit + 1):
        acc.append(acc[-1] + F(1, j))
    return acc


def harmonic_inequality(bound: int = 25) -> bool:
    """H_m + H_n + H_p + H_q <= 3 + H_{mnpq} for all 1 <= m <= n <= p <= q <= bound."""
    _require(1 <= bound <= MAX_EXACT_N, f"bound must be in [1, {MAX_EXACT_N}], got {bound}")
    exact = _exact_harmonics(min(EXACT_HARMONIC_PRODUCT, bound**4))
    checked = 0
    for m in range(1, bound + 1):
        for n in range(m, bound + 1):
            for p in range(n, bound + 1):
                for q in range(p, bound + 1):
                    product = m * n * p * q
                    checked += 1
                    if product <= EXACT_HARMONIC_PRODUCT:
                        if exact[m] + exact[n] + exact[p] + exact[q] > 3 + exact[product]:
                            logger.warning("harmonic inequality fails at %s", (m, n, p, q))
                            return False
                        continue
                    lhs = math.fsum(float(exact[i]) for i in (m, n, p, q))
                    margin = 3 + harmonic_float(product) - lhs
                    if margin <= HARMONIC_MARGIN:
                        logger.warning(
                            "harmonic margin %g not certified at %s", margin, (m, n, p, q)
                        )
                        return False
    logger.debug("harmonic inequality holds on %d quadruples", checked)
    return True


def sine_square_sum(n: int, r: int, s: int) -> bool:
    """sum_{j=1..n} (sin(j r pi/(n+1)) + sin(j s pi/(n+1)))^2 is n+1, or 2(n+1) when r = s."""
    _require(1 <= r <= n and 1 <= s <= n and n <= MAX_EXACT_N, f"bad (n, r, s) = {(n, r, s)}")
    step = math.pi / (n + 1)
    total = math.fsum(
        (math.sin(j * r * step) + math.sin(j * s * step)) ** 2 for j in range(1, n + 1)
    )
    return _close(total, 2 * (n + 1) if r == s else n + 1)


def _grid(lo: float, hi: float, count: int) -> np.ndarray:
    return np.linspace(lo, hi, count)


def chebyshev_partial_fractions(n: int, points: int = 64) -> bool:
    """n / cos(n t) = sum_k (-1)^(k+1) sin(theta_k) / (cos t - cos theta_k).

    theta_k = (2k - 1) pi / 2n, checked on a grid of t away from the poles.
    """
    _require(1 <= n <= MAX_EXACT_N, f"n must be in [1, {MAX_EXACT_N}], got {n}")
    thetas = [(2 * k - 1) * math.pi / (2 * n) for k in range(1, n + 1)]
    for t in _grid(0.013, math.pi - 0.017, points):
        t = float(t)
        if abs(math.cos(n * t)) < 1e-3:
            continue
        lhs = n / math.cos(n * t)
        rhs = math.fsum(
            (-1) ** (k + 1) * math.sin(th) / (math.cos(t) - math.cos(th))
            for k, th in enumerate(thetas, start=1)
        )
        if not _close(lhs, rhs):
            logger.warning("partial fractions differ at n=%d t=%r: %r vs %r", n, t, lhs, rhs)
            return False
    return True


def chebyshev_product(n: int, points: int = 64) -> bool:
    """prod_{k=1..n} (x + sin^2(k pi / 2n)) = 2^(2-2n) (x + 1) U_{n-1}(2x + 1)."""
    _require(1 <= n <= MAX_EXACT_N, f"n must be in [1, {MAX_EXACT_N}], got {n}")
    for x in _grid(-1.5, 1.5, points):
        x = float(x)
        lhs = math.prod(x + math.sin(k * math.pi / (2 * n)) ** 2 for k in range(1, n + 1))
        rhs = 2.0 ** (2 - 2 * n) * (x + 1) * chebyshev("U", n - 1, 2 * x + 1)
        scale = math.prod(abs(x) + 1 for _ in range(n))
        if abs(lhs - rhs) > FLOAT_TOL * scale:
            logger.warning("product differs at n=%d x=%r: %r vs %r", n, x, lhs, rhs)
            return False
    return True


def cubic_discriminant(a: poly.Rational, b: poly.Rational) -> fractions.Fraction:
    a, b = F(a), F(b)
    return (
        -4 * a**4
        - 8 * a**2 * b**2
        - 4 * b**4
        + 12 * a**3
        - 20 * a * b**2
        - 12 * a**2
        + b**2
        + 4 * a
    )


def completed_square_discriminant(a: poly.Rational, b: poly.Rational) -> fractions.Fraction:
    a, b = F(a), F(b)
    return -4 * ((b**2 + a**2 + F(5, 2) * a - F(1, 8)) ** 2 - 8 * (a + F(1, 8)) ** 3)


def discriminant_root_count(
    a: poly.Rational, b: poly.Rational
) -> typing.Tuple[int, fractions.Fraction]:
    """Distinct real roots of a z^3 + b z^2 + (a-1) z + b, with the discriminant."""
    _require(a != 0, "leading coefficient a must be nonzero")
    cubic = poly.Poly.of(b, F(a) - 1, b, a)
    return cubic.real_root_count(), cubic_discriminant(a, b)


def discriminant_suite(seed: int = 2184, count: int = 50) -> bool:
    """Expanded and completed-square forms agree, and the sign of D gives the root count."""
    _require(1 <= count <= 1000, f"count must be in [1, 1000], got {count}")
    rng = np.random.default_rng(seed)
    for _ in range(count):
        a = F(int(rng.integers(-40, 41)), int(rng.integers(1, 9)))
        b = F(int(rng.integers(-40, 41)), int(rng.integers(1, 9)))
        if cubic_discriminant(a, b) != completed_square_discriminant(a, b):
            logger.warning("discriminant forms differ at a=%s b=%s", a, b)
            return False
        if a == 0:
            continue
        roots, disc = discriminant_root_count(a, b)
        if (disc > 0 and roots != 3) or (disc < 0 and roots != 1):
            logger.warning("a=%s b=%s: D=%s but %d real roots", a, b, disc, roots)
            return False
    return True


SUITE: typing.Dict[str, typing.Callable[..., bool]] = {
    "dbl_binom_12415": double_binomial_sum,
    "alt_recip_4951": alternating_reciprocal_sums,
    "quicky_1140a": alternating_binomial_product,
    "quicky_1140b": gamma_binomial_series,
    "elem_1449": binomial_power_sum,
    "harmonic_ineq_4900": harmonic_inequality,
    "trig_sum_4854": sine_square_sum,
    "cheb_partfrac_1296": chebyshev_partial_fractions,
    "cheb_product_12436": chebyshev_product,
    "discriminant_2184": discriminant_suite,
    "gregory_bounds": gregory.gregory_bounds,
}


def binomial_identity_suite(name: str, **params: typing.Any) -> bool:
    if name not in SUITE:
        raise exceptions.UnknownNameError(f"unknown identity {name!r}")
    try:
        holds = SUITE[name](**params)
    except TypeError as exc:
        raise exceptions.ValidationError(f"{name}: bad parameters {params}: {exc}") from exc
    logger.debug("%s%s: %s", name, params, holds)
    return holds
