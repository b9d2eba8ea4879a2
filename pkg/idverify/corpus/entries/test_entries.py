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

import math

import mock
import mpmath
import pytest

from idverify.constants import const_value
from idverify.corpus import identity, registry, verifier
from idverify.corpus.entries import consistency, exact, extrema, inequalities, series
from idverify.corpus.report import Status
from idverify.exact import CheckReport
from idverify.specfun import harmonic_float

EULER_GAMMA = const_value("euler_gamma")

QUICK = [
    "crux-4988",
    "amm-12398",
    "crux-4905a",
    "crux-4905b",
    "crux-4636",
    "amm-12510",
    "exact-12415",
    "exact-2117",
    "exact-1449",
    "amm-12406",
    "crux-4953",
    "crux-4772",
    "mm-1947",
    "amm-10857",
    "elem-1453",
    "crux-4817",
    "elem-1442",
    "elem-1383max",
    "amm-12501",
    "elem-1443",
    "crux-4828",
    "amm-12362",
]


@pytest.mark.parametrize("identity_id", QUICK)
def test_quick_entries_pass(identity_id, ctx):
    outcome = verifier.evaluate(registry.builtin_manifest().get(identity_id), ctx)
    assert outcome.status == Status.PASS, outcome


def test_check_entries_report_one():
    for entry in registry.builtin_manifest():
        if entry.category in (
            identity.Category.EXACT,
            identity.Category.FUNCTIONAL_EQUATION,
            identity.Category.INEQUALITY,
        ):
            assert entry.rhs == identity.ONE, entry.id


def test_consistency_entries_are_oracles():
    entries = [
        e for e in registry.builtin_manifest() if e.category == identity.Category.CONSISTENCY
    ]
    assert {e.id for e in entries} == {"elem-1431", "crux-4937"}
    assert all(e.is_oracle for e in entries)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75, 1.0])
def test_holder_grid_sup_below_constant(alpha):
    sup = inequalities.holder_ratio_sup(alpha, points=64)
    assert sup <= inequalities.holder_constant(alpha) + 1e-9
    assert sup >= 1.0 - 1e-12


def test_holder_constant_switches_at_one_half():
    assert inequalities.holder_constant(0.3) == 1.0
    assert inequalities.holder_constant(0.5) == pytest.approx(1.0)
    assert inequalities.holder_constant(0.8) > 1.0


def test_holder_log_max_closed_form():
    # the maximizer a* satisfies tan(a* pi/2) = pi/(2 log 2)
    a = 2 / math.pi * math.atan(math.pi / (2 * math.log(2)))
    direct = (1 - a) * math.log(2) + math.log(math.sin(a * math.pi / 2))
    assert extrema.HOLDER_LOG_MAX.evaluate() == pytest.approx(direct, abs=1e-14)
    assert direct == pytest.approx(0.0945, abs=1e-3)


def test_amm_12501_integrates_the_stated_integrand(ctx):
    def f(x):
        return mpmath.log(x / (1 + x)) ** 4 * mpmath.log(x**3 * (1 + x) ** 17) / (1 + x)

    with mpmath.workdps(30):
        want = float(mpmath.quad(f, [0, 1, mpmath.inf]))
    got = registry.builtin_manifest().get("amm-12501").lhs(ctx.for_tol(1e-9))
    assert got.value == pytest.approx(want, abs=1e-8)
    assert got.value == pytest.approx(-240 * float(mpmath.zeta(3)) ** 2, abs=1e-9)


TAIL_MODEL_ENTRIES = [
    "amm-10605",
    "crux-4836a",
    "crux-4903",
    "crux-4965b",
    "elem-1281a",
    "elem-1281b",
    "mm-2167b",
]


@pytest.mark.parametrize("identity_id", TAIL_MODEL_ENTRIES)
def test_tail_models_hold_under_fast_profile(identity_id, fast_ctx):
    outcome = verifier.evaluate(registry.builtin_manifest().get(identity_id), fast_ctx)
    assert outcome.status == Status.PASS, outcome
    assert outcome.kernel_err <= outcome.tol


@pytest.mark.parametrize("alpha", [2.0, 4.0])
def test_power_model_terms_follow_target(alpha, ctx, fast_ctx):
    # pylint: disable=protected-access
    full = series._power_model(ctx.for_tol(1e-10), alpha)
    fast = series._power_model(fast_ctx.for_tol(1e-10), alpha)
    assert full.n_terms == 400
    assert fast_ctx.budget(400) < fast.n_terms < full.n_terms


def test_crux_4894_tail_model_tracks_terms():
    n = 10_000
    term = harmonic_float(n - 1) * harmonic_float(n + 1) / (n * (n + 1))
    # pylint: disable-next=protected-access
    smooth = series._harmonic_smooth(n - 1) * series._harmonic_smooth(n + 1) / (n * (n + 1))
    assert smooth == pytest.approx(term, rel=1e-12)
    closed = ((math.log(n) + EULER_GAMMA) ** 2 + math.pi**2 / 6) / n**2
    # summed over the tail the zeta(2) / x^2 term alone is above 1e-5
    assert abs(closed - term) * n > 1e-5


def test_finite_difference_failures_are_logged(ctx, caplog):
    bad = CheckReport(3, ("deg = n=2: got 1, want 2",))
    with mock.patch.object(exact, "euler_finite_difference_suite", return_value=bad):
        res = registry.builtin_manifest().get("exact-12535").lhs(ctx)
    assert res.value == 0.0
    assert "deg = n=2" in caplog.text


@pytest.mark.parametrize("n", [0, 1, 7, 90])
def test_central_binomial_weights(n):
    # pylint: disable-next=protected-access
    got = consistency._central(n)
    assert got == pytest.approx(math.comb(2 * n, n) / 4**n, rel=1e-13)
